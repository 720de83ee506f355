#pragma once

#include <vector>

#include "delegsim/network.hpp"
#include "delegsim/rng.hpp"

namespace delegsim {

// Per-agent competence theta ~ Uniform(0,1), fixed for a run; drawn in agent
// id order (one u01 per agent).
std::vector<double> sample_competences(const DelegationNetwork& net, Rng& rng);

// Task execution succeeds with probability theta (one u01 per call).
inline bool execute_task(double theta, Rng& rng) { return rng.u01() < theta; }

}  // namespace delegsim
