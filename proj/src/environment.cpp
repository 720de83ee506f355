#include "delegsim/environment.hpp"

namespace delegsim {

std::vector<double> sample_competences(const DelegationNetwork& net, Rng& rng) {
  std::vector<double> theta(net.n_agents);
  for (auto& t : theta) t = rng.u01();
  return theta;
}

}  // namespace delegsim
