#include "delegsim/gittins_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace delegsim {

double exact_gittins_bernoulli(const BeliefState& b, const DiscountParams& d,
                               int horizon) {
  if (horizon < 1)
    throw std::domain_error("exact_gittins_bernoulli: horizon must be >= 1");
  if (std::pow(d.delta, horizon) >= 1e-6)
    throw std::domain_error(
        "exact_gittins_bernoulli: horizon too short for delta (need "
        "delta^horizon < 1e-6)");

  const double a0 = b.alpha;
  const double b0 = b.beta;
  const double delta = d.delta;
  const int H = horizon;
  std::vector<double> V(H + 1);

  // Value of the continue-vs-retire problem minus the pure-retirement value;
  // positive iff continuing is worth more than retiring on lambda forever.
  const auto cont_minus_retire = [&](double lam) {
    std::fill(V.begin(), V.end(), 0.0);
    for (int k = H - 1; k >= 0; --k) {
      const double retire =
          lam * (1.0 - std::pow(delta, H - k)) / (1.0 - delta);
      // In-place ascending sweep: V[s] and V[s+1] still hold level k+1.
      for (int s = 0; s <= k; ++s) {
        const double mu = (a0 + s) / (a0 + b0 + k);
        const double cont =
            mu * (1.0 + delta * V[s + 1]) + (1.0 - mu) * delta * V[s];
        V[s] = std::max(retire, cont);
      }
    }
    return V[0] - lam * (1.0 - std::pow(delta, H)) / (1.0 - delta);
  };

  double lo = a0 / (a0 + b0);
  double hi = 1.0;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (cont_minus_retire(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace delegsim
