#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delegsim/beliefs.hpp"
#include "delegsim/network.hpp"
#include "delegsim/policies.hpp"

namespace delegsim {

// cumulative[t] = mu_star*(t+1) - sum_{s<=t} rewards[s].
std::vector<double> cumulative_regret(const std::vector<double>& rewards,
                                      double mu_star);

// e_t = |1 - p_t| over an ensemble success-probability series.
std::vector<double> error_series(const std::vector<double>& ensemble);

// Mean of q_t = log(e_{t+1}/e_t) / log(e_t/e_{t-1}) over t = 1..cutoff,
// skipping terms with a zero error or a unit ratio. Fewer than 3 usable terms
// signals insufficient data (nullopt). Requires 1 <= cutoff <= len-2.
std::optional<double> convergence_rate(const std::vector<double>& e,
                                       int64_t cutoff);

// Warm-up detection: smooth the ensemble with a centered moving average of
// the given window, then return the first index from which the relative
// change of the smoothed series over one window stays below tol through the
// end; series length if it never settles. Throws std::invalid_argument for
// window < 1, window >= length, or tol <= 0.
int64_t welch_cutoff(const std::vector<double>& ensemble, int window, double tol);

struct SummaryRow {
  PolicyKind policy = PolicyKind::UCB1;
  double final_prob = 0.0;
  double cr_lo = 0.0;
  double cr_hi = 0.0;
  std::optional<double> mean_rate;
  double mean_regret = 0.0;
};

// Pools the terminal window (last 10% of trials, at least 1) of every run's
// outcomes into one Beta posterior for final_prob and its 95% credible
// region; mean_regret and mean_rate are plain means (empty rates -> nullopt).
SummaryRow summarize(PolicyKind policy,
                     const std::vector<std::vector<uint8_t>>& per_run_outcomes,
                     const std::vector<double>& regrets,
                     const std::vector<double>& rates);

// Best competence reachable from the root within depth D (root included);
// in a complete tree that is every agent.
double mu_star_of(const DelegationNetwork& net,
                  const std::vector<double>& competences);

// Arms of the root-level bandit abstraction: one arm per root child, valued
// at the child's own competence; gap = mu_star - value, one entry per child
// with a positive gap plus explicit zeros for children matching mu_star.
GapProfile gap_profile_of(const DelegationNetwork& net,
                          const std::vector<double>& competences);

}  // namespace delegsim
