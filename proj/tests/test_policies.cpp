#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "delegsim/policies.hpp"
#include "doctest.h"

using namespace delegsim;

namespace {

struct Setup {
  DelegationNetwork net;
  std::vector<double> theta;
  BanditPolicyState st;
  Rng policy_rng;
  Rng env_rng;

  Setup(int K, int D, uint64_t seed, double epsilon = 0.0, double delta = 0.9)
      : net(generate_network(K, D)),
        st(make_bandit_state(net, epsilon, delta)),
        policy_rng(derive_seed(seed, 1, 0)),
        env_rng(derive_seed(seed, 0, 0)) {
    theta = sample_competences(net, env_rng);
  }
};

}  // namespace

TEST_CASE("policy names and tags round-trip") {
  for (PolicyKind k : kAllPolicies) {
    CHECK(policy_from_name(policy_name(k)) == k);
  }
  CHECK(policy_from_name("ucb1") == PolicyKind::UCB1);
  CHECK(policy_from_name("did") == PolicyKind::DID);
  CHECK(policy_from_name("egreedy") == PolicyKind::EGREEDY);
  CHECK(policy_from_name("dig") == PolicyKind::DIG);
  CHECK(!policy_from_name("bogus").has_value());
  CHECK(policy_tag(PolicyKind::UCB1) == 1);
  CHECK(policy_tag(PolicyKind::DID) == 2);
  CHECK(policy_tag(PolicyKind::EGREEDY) == 3);
  CHECK(policy_tag(PolicyKind::DIG) == 4);
}

TEST_CASE("single-agent network leaves no one to delegate to") {
  for (PolicyKind k : {PolicyKind::UCB1, PolicyKind::DID, PolicyKind::EGREEDY}) {
    Setup s(1, 0, 5, 0.07);
    for (int t = 0; t < 50; ++t) {
      const auto ch = bandit_trial(k, s.st, s.net, s.theta, s.policy_rng,
                                   s.env_rng);
      REQUIRE(ch.path.size() == 1);
      CHECK(ch.path[0] == 0);
      CHECK(ch.executor() == 0);
    }
    CHECK(s.st.trial_counter == 50);
  }
}

TEST_CASE("fresh ties break to the lowest agent id") {
  // all edges Beta(1,1): identical scores, so the first child must win
  for (PolicyKind k : {PolicyKind::UCB1, PolicyKind::DID, PolicyKind::EGREEDY}) {
    Setup s(5, 1, 11);
    const auto ch = bandit_trial(k, s.st, s.net, s.theta, s.policy_rng,
                                 s.env_rng);
    REQUIRE(ch.path.size() == 2);
    CHECK(ch.path[1] == 1);
  }
}

TEST_CASE("pure exploitation locks onto the better edge") {
  // fixed 2-neighbor net, thetas (root 0.5, children 0.9 and 0.1), epsilon 0
  DelegationNetwork net = generate_network(2, 1);
  const std::vector<double> theta = {0.5, 0.9, 0.1};
  BanditPolicyState st = make_bandit_state(net, 0.0, 0.9);
  Rng policy_rng(derive_seed(3, 3, 0));
  Rng env_rng(derive_seed(3, 0, 0));
  int on_good = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto ch = bandit_trial(PolicyKind::EGREEDY, st, net, theta,
                                 policy_rng, env_rng);
    on_good += ch.executor() == 1 ? 1 : 0;
  }
  CHECK(on_good >= 950);
}

TEST_CASE("exploration rate matches epsilon") {
  const double eps = 0.07;
  Setup s(5, 1, 17, eps);
  const int T = 10000;
  for (int t = 0; t < T; ++t)
    bandit_trial(PolicyKind::EGREEDY, s.st, s.net, s.theta, s.policy_rng,
                 s.env_rng);
  // one exploration coin per trial at depth 1
  const double rate = static_cast<double>(s.st.explore_count) / T;
  CHECK(std::fabs(rate - eps) < 0.01);
}

TEST_CASE("chains stay inside the depth bound over randomized configurations") {
  Rng meta(365);
  int64_t total_trials = 0;
  while (total_trials < 100000) {
    const int K = 1 + meta.uniform_index(4);
    const int D = meta.uniform_index(4);
    const PolicyKind k = kAllPolicies[meta.uniform_index(3)];
    Setup s(K, D, meta.u01() * 1e9, 0.08);
    const int batch = 200;
    for (int t = 0; t < batch; ++t) {
      const auto ch = bandit_trial(k, s.st, s.net, s.theta, s.policy_rng,
                                   s.env_rng);
      REQUIRE(ch.path.size() <= static_cast<size_t>(D) + 1);
      REQUIRE(ch.path[0] == 0);
      for (size_t i = 1; i < ch.path.size(); ++i)
        REQUIRE(s.net.parent(ch.path[i]) == ch.path[i - 1]);
    }
    total_trials += batch;
  }
  CHECK(total_trials >= 100000);
}

TEST_CASE("belief mass equals traversed edges") {
  // bandit chains always reach depth D, so T trials deposit T*D observations
  for (PolicyKind k : {PolicyKind::UCB1, PolicyKind::DID, PolicyKind::EGREEDY}) {
    Setup s(3, 3, 23, 0.06);
    const int T = 500;
    for (int t = 0; t < T; ++t)
      bandit_trial(k, s.st, s.net, s.theta, s.policy_rng, s.env_rng);
    double mass = 0.0;
    for (int64_t m = 1; m < s.net.n_agents; ++m)
      mass += s.st.edge_beliefs[m].count() - 2.0;
    CHECK(mass == doctest::Approx(static_cast<double>(T) * s.net.D));
    CHECK(s.st.trial_counter == T);
  }
}

TEST_CASE("trials replay bit-identically from equal seeds") {
  for (PolicyKind k : {PolicyKind::UCB1, PolicyKind::DID, PolicyKind::EGREEDY}) {
    Setup a(4, 2, 77, 0.09), b(4, 2, 77, 0.09);
    for (int t = 0; t < 300; ++t) {
      const auto ca = bandit_trial(k, a.st, a.net, a.theta, a.policy_rng,
                                   a.env_rng);
      const auto cb = bandit_trial(k, b.st, b.net, b.theta, b.policy_rng,
                                   b.env_rng);
      REQUIRE(ca.path == cb.path);
      REQUIRE(ca.outcome == cb.outcome);
    }
    for (int64_t m = 1; m < a.net.n_agents; ++m) {
      REQUIRE(a.st.edge_beliefs[m].alpha == b.st.edge_beliefs[m].alpha);
      REQUIRE(a.st.edge_beliefs[m].beta == b.st.edge_beliefs[m].beta);
    }
  }
}

TEST_CASE("the quitting-game policy is rejected at this entry point") {
  Setup s(2, 1, 1);
  CHECK_THROWS_AS(bandit_trial(PolicyKind::DIG, s.st, s.net, s.theta,
                               s.policy_rng, s.env_rng),
                  std::invalid_argument);
}
