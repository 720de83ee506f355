#pragma once

#include "delegsim/beliefs.hpp"
#include "delegsim/indices.hpp"

namespace delegsim {

// Exact Bernoulli-bandit Gittins index by retirement calibration: binary
// search over the retirement value lambda in [mu, 1]; each probe runs
// finite-horizon value iteration over the Beta-count lattice. Requires
// delta^horizon < 1e-6 so the truncation error is below the 1e-4 search
// tolerance.
double exact_gittins_bernoulli(const BeliefState& b, const DiscountParams& d,
                               int horizon);

}  // namespace delegsim
