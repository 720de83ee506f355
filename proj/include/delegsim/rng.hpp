#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace delegsim {

// SplitMix64 step function; used as the seed-derivation hash.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derived stream seed = splitmix chain over (master, tag, run).
// Stream layout (documented so any implementation can reproduce it):
//   tag 0          shared environment stream (paired mode)
//   tag 1..4       policy streams: UCB1=1, DID=2, EGREEDY=3, DIG=4
//   tag 16+policy  per-policy environment streams (decoupled mode)
inline uint64_t derive_seed(uint64_t master, uint64_t tag, uint64_t run) {
  uint64_t s = master;
  uint64_t h = splitmix64(s);
  s = h ^ tag;
  h = splitmix64(s);
  s = h ^ run;
  return splitmix64(s);
}

// Deterministic RNG: mt19937_64 as the raw 64-bit source, with all real-valued
// draws defined here (not via std::distributions, whose outputs vary across
// standard-library implementations).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  // Uniform on [0,1), 53-bit resolution.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe under log().
  double u01_pos() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Uniform index in [0, n); n must be small enough that the 53-bit grid
  // makes the modular bias negligible (n <= 2^26 or so).
  int uniform_index(int n) {
    int i = static_cast<int>(u01() * n);
    return i >= n ? n - 1 : i;
  }

  // Box-Muller; two raw draws per variate.
  double normal() {
    double u = u01_pos();
    double v = u01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
  }

  // Marsaglia-Tsang; shape < 1 boosted through shape+1.
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = u01_pos();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = u01_pos();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 eng_;
};

}  // namespace delegsim
