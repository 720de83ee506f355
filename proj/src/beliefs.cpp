#include "delegsim/beliefs.hpp"

#include <boost/math/distributions/beta.hpp>
#include <stdexcept>

namespace delegsim {

std::pair<double, double> credible_interval(const BeliefState& b, double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::domain_error("credible_interval: level must be in (0,1)");
  const boost::math::beta_distribution<double> dist(b.alpha, b.beta);
  const double tail = 0.5 * (1.0 - level);
  return {boost::math::quantile(dist, tail),
          boost::math::quantile(dist, 1.0 - tail)};
}

}  // namespace delegsim
