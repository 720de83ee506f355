#include "delegsim/indices.hpp"

#include <cmath>
#include <stdexcept>

namespace delegsim {

namespace {
constexpr double kPi = 3.14159265358979323846;

double psi_tail(double tau) {
  return std::sqrt(2.0 * std::log(tau) - std::log(std::log(tau)) -
                   std::log(16.0 * kPi));
}
}  // namespace

DiscountParams DiscountParams::from_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("DiscountParams: delta must be in (0,1)");
  return {delta, -std::log(delta)};
}

double psi(double tau) {
  if (!(tau > 0.0)) throw std::domain_error("psi: tau must be positive");
  if (tau <= 0.2) return std::sqrt(tau / 2.0);
  if (tau <= 1.0) return 0.49 - 0.11 / std::sqrt(tau);
  if (tau <= 5.0) return 0.63 - 0.26 / std::sqrt(tau);
  if (tau <= 15.0) return 0.77 - 0.58 / std::sqrt(tau);
  return psi_tail(tau);
}

std::array<double, 4> psi_branch_jumps() {
  const double b0 = std::sqrt(0.2 / 2.0) - (0.49 - 0.11 / std::sqrt(0.2));
  const double b1 = (0.49 - 0.11) - (0.63 - 0.26);
  const double b2 =
      (0.63 - 0.26 / std::sqrt(5.0)) - (0.77 - 0.58 / std::sqrt(5.0));
  const double b3 = (0.77 - 0.58 / std::sqrt(15.0)) - psi_tail(15.0);
  return {std::fabs(b0), std::fabs(b1), std::fabs(b2), std::fabs(b3)};
}

double gittins_approx(const BeliefState& b, const DiscountParams& d) {
  const double mu = b.mean();
  const double n = b.count();
  const double tau = 1.0 / ((n + 1.0) * d.c);
  return mu + std::sqrt(mu * (1.0 - mu) / (n + 1.0)) * psi(tau);
}

double ucb1_score(const BeliefState& b, int64_t total_trials) {
  if (total_trials < 1)
    throw std::domain_error("ucb1_score: total_trials must be >= 1");
  const double n = b.count();
  return b.mean() +
         std::sqrt(2.0 * std::log(static_cast<double>(total_trials)) / n);
}

double ucb1_regret_bound(const GapProfile& g, int64_t T) {
  if (T < 1) throw std::domain_error("ucb1_regret_bound: T must be >= 1");
  const double logT = std::log(static_cast<double>(T));
  double log_sum = 0.0;
  double lin_sum = 0.0;
  for (double gap : g.gaps) {
    if (gap > 0.0) log_sum += logT / gap;
    lin_sum += gap;
  }
  return 8.0 * log_sum + (1.0 + kPi * kPi / 3.0) * lin_sum;
}

}  // namespace delegsim
