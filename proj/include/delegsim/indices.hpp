#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "delegsim/beliefs.hpp"

namespace delegsim {

// Geometric discounting delta = e^{-c}.
struct DiscountParams {
  double delta;
  double c;  // = -ln(delta) > 0

  static DiscountParams from_delta(double delta);
};

// Continuation-boundary function of the closed-form Gittins approximation.
// Piecewise in tau; throws std::domain_error for tau <= 0.
double psi(double tau);

// |left - right| branch mismatches of psi at tau = 0.2, 1, 5, 15, for
// diagnostic logging (the approximation is only near-continuous).
std::array<double, 4> psi_branch_jumps();

// G = mu + sqrt(mu(1-mu)/(n+1)) * psi(1/((n+1)c)), mu = alpha/(alpha+beta),
// n = alpha+beta.
double gittins_approx(const BeliefState& b, const DiscountParams& d);

// mu + sqrt(2 ln(total_trials) / (alpha+beta)); total_trials >= 1.
double ucb1_score(const BeliefState& b, int64_t total_trials);

// Gap structure of a bandit instance: mu_star and per-suboptimal-arm gaps.
// Zero gaps are legal; they are skipped by the logarithmic sum and contribute
// nothing to the linear sum.
struct GapProfile {
  double mu_star = 0.0;
  std::vector<double> gaps;
};

// Logarithmic regret bound: 8 sum_{g>0} ln(T)/g + (1 + pi^2/3) sum_g g.
double ucb1_regret_bound(const GapProfile& g, int64_t T);

}  // namespace delegsim
