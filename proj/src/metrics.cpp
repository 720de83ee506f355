#include "delegsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace delegsim {

std::vector<double> cumulative_regret(const std::vector<double>& rewards,
                                      double mu_star) {
  std::vector<double> cum(rewards.size());
  double sum = 0.0;
  for (size_t t = 0; t < rewards.size(); ++t) {
    sum += rewards[t];
    cum[t] = mu_star * static_cast<double>(t + 1) - sum;
  }
  return cum;
}

std::vector<double> error_series(const std::vector<double>& ensemble) {
  std::vector<double> e(ensemble.size());
  for (size_t t = 0; t < ensemble.size(); ++t) e[t] = std::fabs(1.0 - ensemble[t]);
  return e;
}

std::optional<double> convergence_rate(const std::vector<double>& e,
                                       int64_t cutoff) {
  const int64_t n = static_cast<int64_t>(e.size());
  if (cutoff < 1 || cutoff > n - 2)
    throw std::invalid_argument(
        "convergence_rate: cutoff must be in [1, len-2]");
  double sum = 0.0;
  int64_t used = 0;
  for (int64_t t = 1; t <= cutoff; ++t) {
    if (e[t - 1] <= 0.0 || e[t] <= 0.0 || e[t + 1] <= 0.0) continue;
    const double r1 = e[t + 1] / e[t];
    const double r0 = e[t] / e[t - 1];
    if (r1 == 1.0 || r0 == 1.0) continue;
    sum += std::log(r1) / std::log(r0);
    ++used;
  }
  if (used < 3) return std::nullopt;
  return sum / static_cast<double>(used);
}

int64_t welch_cutoff(const std::vector<double>& ensemble, int window,
                     double tol) {
  const int64_t n = static_cast<int64_t>(ensemble.size());
  if (window < 1) throw std::invalid_argument("welch_cutoff: window must be >= 1");
  if (window >= n)
    throw std::invalid_argument(
        "welch_cutoff: window must be smaller than the series length");
  if (!(tol > 0.0)) throw std::invalid_argument("welch_cutoff: tol must be > 0");

  // Centered moving average; the window shrinks at the edges.
  const int64_t half = window / 2;
  std::vector<double> cs(n + 1, 0.0);
  for (int64_t t = 0; t < n; ++t) cs[t + 1] = cs[t] + ensemble[t];
  std::vector<double> m(n);
  for (int64_t t = 0; t < n; ++t) {
    const int64_t lo = std::max<int64_t>(0, t - half);
    const int64_t hi = std::min<int64_t>(n, t + half + 1);
    m[t] = (cs[hi] - cs[lo]) / static_cast<double>(hi - lo);
  }

  // Flat from index i onward: no one-window relative change >= tol at any
  // later checkable lag. Cutoff = one past the last violation.
  const int64_t limit = n - window;
  int64_t last_viol = -1;
  for (int64_t t = 0; t < limit; ++t) {
    const double rel =
        std::fabs(m[t + window] - m[t]) / std::max(std::fabs(m[t]), 1e-12);
    if (rel >= tol) last_viol = t;
  }
  if (last_viol == limit - 1) return n;  // still moving at the end
  return last_viol + 1;
}

SummaryRow summarize(PolicyKind policy,
                     const std::vector<std::vector<uint8_t>>& per_run_outcomes,
                     const std::vector<double>& regrets,
                     const std::vector<double>& rates) {
  if (per_run_outcomes.empty())
    throw std::invalid_argument("summarize: at least one run required");
  SummaryRow row;
  row.policy = policy;

  BeliefState pooled;
  for (const auto& outcomes : per_run_outcomes) {
    const int64_t T = static_cast<int64_t>(outcomes.size());
    const int64_t window = std::max<int64_t>(1, T / 10);
    for (int64_t t = T - window; t < T; ++t)
      pooled = update_belief(pooled, outcomes[t] != 0);
  }
  row.final_prob = pooled.mean();
  const auto cr = credible_interval(pooled, 0.95);
  row.cr_lo = cr.first;
  row.cr_hi = cr.second;

  double rsum = 0.0;
  for (double r : regrets) rsum += r;
  row.mean_regret = regrets.empty() ? 0.0 : rsum / regrets.size();

  if (!rates.empty()) {
    double qsum = 0.0;
    for (double q : rates) qsum += q;
    row.mean_rate = qsum / rates.size();
  }
  return row;
}

double mu_star_of(const DelegationNetwork& net,
                  const std::vector<double>& competences) {
  // Every agent of the complete tree lies within depth D of the root.
  double best = 0.0;
  for (int64_t a = 0; a < net.n_agents; ++a) best = std::max(best, competences[a]);
  return best;
}

GapProfile gap_profile_of(const DelegationNetwork& net,
                          const std::vector<double>& competences) {
  GapProfile g;
  g.mu_star = mu_star_of(net, competences);
  if (!net.is_leaf(0)) {
    const int64_t base = net.first_child(0);
    g.gaps.reserve(net.K);
    for (int i = 0; i < net.K; ++i)
      g.gaps.push_back(g.mu_star - competences[base + i]);
  }
  return g;
}

}  // namespace delegsim
