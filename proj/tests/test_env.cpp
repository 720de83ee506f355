#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "delegsim/beliefs.hpp"
#include "delegsim/environment.hpp"
#include "delegsim/network.hpp"
#include "delegsim/rng.hpp"
#include "doctest.h"

using namespace delegsim;

TEST_CASE("complete tree sizes") {
  CHECK(complete_tree_size(5, 4) == 781);
  CHECK(complete_tree_size(1, 0) == 1);
  CHECK(complete_tree_size(2, 2) == 7);
  CHECK(complete_tree_size(3, 1) == 4);
  // 1 + 100 + 10^4 + 10^6 = 1,010,101 exceeds the node cap
  CHECK(complete_tree_size(100, 3) > kNodeCap);
}

TEST_CASE("network generation and invariants") {
  const auto net = generate_network(5, 4);
  CHECK(net.n_agents == 781);
  CHECK(net.K == 5);
  CHECK(net.D == 4);
  CHECK(net.level_offset.size() == 6);
  CHECK(net.level_offset[0] == 0);
  CHECK(net.level_offset[1] == 1);
  CHECK(net.level_offset[5] == 781);

  // pure function of (K, D)
  const auto net2 = generate_network(5, 4);
  CHECK(net.level_offset == net2.level_offset);
  CHECK(net.n_agents == net2.n_agents);

  // neighbor counts: K below depth D, none at depth D
  for (int64_t a = 0; a < net.n_agents; ++a) {
    const auto nb = net.neighbors(a);
    if (net.depth_of(a) < net.D) {
      REQUIRE(nb.size() == 5);
      for (size_t i = 0; i < nb.size(); ++i) {
        CHECK(nb[i] == 5 * a + 1 + static_cast<int64_t>(i));
        CHECK(net.parent(nb[i]) == a);
      }
      CHECK(!net.is_leaf(a));
    } else {
      CHECK(nb.empty());
      CHECK(net.is_leaf(a));
    }
  }

  // depth is consistent with the heap-order parent map
  for (int64_t a = 1; a < net.n_agents; ++a)
    CHECK(net.depth_of(a) == net.depth_of(net.parent(a)) + 1);
}

TEST_CASE("network rejects invalid or oversized shapes") {
  CHECK_THROWS_AS(generate_network(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(generate_network(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(generate_network(100, 3), std::invalid_argument);
  CHECK_NOTHROW(generate_network(1, 0));
}

TEST_CASE("competence sampling: determinism, domain, mean") {
  // a K=1 chain gives a large agent count without a wide tree
  const auto net = generate_network(1, 99999);
  REQUIRE(net.n_agents == 100000);

  Rng r1(2024), r2(2024), r3(2025);
  const auto t1 = sample_competences(net, r1);
  const auto t2 = sample_competences(net, r2);
  const auto t3 = sample_competences(net, r3);
  CHECK(t1 == t2);
  CHECK(t1 != t3);

  double sum = 0.0;
  for (double v : t1) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    sum += v;
  }
  CHECK(std::fabs(sum / static_cast<double>(t1.size()) - 0.5) < 0.01);
}

TEST_CASE("task execution follows the competence rate") {
  Rng rng(99);
  // deterministic extremes
  for (int i = 0; i < 1000; ++i) CHECK(execute_task(1.0, rng));
  for (int i = 0; i < 1000; ++i) CHECK(!execute_task(0.0, rng));
  // theta = 0.3: success frequency within 4 sigma of the rate
  const int n = 100000;
  int succ = 0;
  for (int i = 0; i < n; ++i) succ += execute_task(0.3, rng) ? 1 : 0;
  const double p = static_cast<double>(succ) / n;
  CHECK(std::fabs(p - 0.3) < 4.0 * std::sqrt(0.3 * 0.7 / n));
}

TEST_CASE("belief conjugacy examples") {
  const BeliefState prior;
  CHECK(prior.alpha == 1.0);
  CHECK(prior.beta == 1.0);
  CHECK(prior.mean() == 0.5);

  const BeliefState s = update_belief(prior, true);
  CHECK(s.alpha == 2.0);
  CHECK(s.beta == 1.0);
  CHECK(s.mean() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const BeliefState f = update_belief(prior, false);
  CHECK(f.alpha == 1.0);
  CHECK(f.beta == 2.0);
  CHECK(f.mean() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  BeliefState b = prior;
  for (int i = 0; i < 9; ++i) b = update_belief(b, true);
  b = update_belief(b, false);
  CHECK(b.alpha == 10.0);
  CHECK(b.beta == 2.0);
  CHECK(b.mean() == doctest::Approx(10.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("belief update commutativity") {
  // any interleaving of 4 successes and 3 failures lands on Beta(5,4)
  std::vector<bool> obs = {true, true, true, true, false, false, false};
  std::sort(obs.begin(), obs.end());
  do {
    BeliefState b;
    for (bool o : obs) b = update_belief(b, o);
    CHECK(b.alpha == 5.0);
    CHECK(b.beta == 4.0);
  } while (std::next_permutation(obs.begin(), obs.end()));
}

TEST_CASE("posterior mean monotone in counts") {
  for (int a = 1; a <= 20; ++a)
    for (int bb = 1; bb <= 20; ++bb) {
      const BeliefState b{static_cast<double>(a), static_cast<double>(bb)};
      CHECK(update_belief(b, true).mean() > b.mean());
      CHECK(update_belief(b, false).mean() < b.mean());
    }
}

TEST_CASE("credible interval pinned quantiles") {
  const auto [lo1, hi1] = credible_interval(BeliefState{1, 1}, 0.95);
  CHECK(lo1 == doctest::Approx(0.025).epsilon(1e-9));
  CHECK(hi1 == doctest::Approx(0.975).epsilon(1e-9));

  // Beta(2,1) has CDF x^2, so the quantile function is sqrt(q)
  const auto [lo2, hi2] = credible_interval(BeliefState{2, 1}, 0.95);
  CHECK(lo2 == doctest::Approx(std::sqrt(0.025)).epsilon(1e-9));
  CHECK(hi2 == doctest::Approx(std::sqrt(0.975)).epsilon(1e-9));
}

TEST_CASE("credible interval of a concentrated posterior, with MC cross-check") {
  const BeliefState b{100, 100};
  const auto [lo, hi] = credible_interval(b, 0.95);
  CHECK(lo < 0.5);
  CHECK(hi > 0.5);
  CHECK(hi - lo < 0.15);

  // empirical 2.5% / 97.5% quantiles of 10^6 Beta(100,100) samples
  const int n = 1000000;
  std::vector<double> xs(n);
  Rng rng(4242);
  for (int i = 0; i < n; ++i) xs[i] = rng.beta(100.0, 100.0);
  std::sort(xs.begin(), xs.end());
  CHECK(std::fabs(xs[static_cast<int>(0.025 * n)] - lo) < 0.01);
  CHECK(std::fabs(xs[static_cast<int>(0.975 * n)] - hi) < 0.01);
}

TEST_CASE("credible interval contains the posterior mean") {
  for (int a = 1; a <= 12; ++a)
    for (int bb = 1; bb <= 12; ++bb) {
      const BeliefState b{static_cast<double>(a), static_cast<double>(bb)};
      const auto [lo, hi] = credible_interval(b, 0.95);
      CHECK(lo < b.mean());
      CHECK(hi > b.mean());
      CHECK(lo < hi);
    }
  CHECK_THROWS_AS(credible_interval(BeliefState{1, 1}, 0.0), std::domain_error);
  CHECK_THROWS_AS(credible_interval(BeliefState{1, 1}, 1.0), std::domain_error);
}

TEST_CASE("seeded streams replay bit-identically") {
  const uint64_t seed = derive_seed(7, 0, 3);
  Rng a(seed), b(seed);
  for (int i = 0; i < 10000; ++i) {
    CHECK(a.u01() == b.u01());
    if (i % 3 == 0) CHECK(a.beta(2.0, 5.0) == b.beta(2.0, 5.0));
  }
  // distinct (tag, run) coordinates give distinct streams
  CHECK(derive_seed(7, 0, 3) != derive_seed(7, 1, 3));
  CHECK(derive_seed(7, 0, 3) != derive_seed(7, 0, 4));
  CHECK(derive_seed(7, 0, 3) != derive_seed(8, 0, 3));
}
