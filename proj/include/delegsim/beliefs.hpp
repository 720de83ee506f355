#pragma once

#include <utility>

namespace delegsim {

// Beta(alpha, beta) posterior over a Bernoulli success rate. The prior floor
// alpha = beta = 1 keeps the posterior mean defined before any observation.
struct BeliefState {
  double alpha = 1.0;
  double beta = 1.0;

  double mean() const { return alpha / (alpha + beta); }
  double count() const { return alpha + beta; }
};

inline BeliefState update_belief(BeliefState b, bool success) {
  if (success)
    b.alpha += 1.0;
  else
    b.beta += 1.0;
  return b;
}

// Equal-tailed posterior interval at the given level: the (1-level)/2 and
// 1-(1-level)/2 quantiles of Beta(alpha, beta).
std::pair<double, double> credible_interval(const BeliefState& b, double level);

}  // namespace delegsim
