#include "delegsim/dig.hpp"

#include <algorithm>
#include <cmath>

#include "delegsim/environment.hpp"

namespace delegsim {

double mixed_strategy(const RewardTriple& rj, const RewardTriple& rk) {
  const double den = rj.r2 - rk.r0;
  if (std::fabs(den) < 1e-9) return 0.0;
  const double v = (rj.r1 - rk.r0) / den;
  return std::clamp(v, 0.0, 1.0);
}

double dig_delegation_prob(double x, double successes, double weight) {
  return std::min(1.0, (weight * x + successes) / (weight + successes));
}

DigState dig_init(const DelegationNetwork& net, Rng& rng) {
  DigState st;
  const int64_t n = net.n_agents;
  st.rewards.resize(n);
  for (auto& r : st.rewards) {
    r.r0 = rng.u01();
    r.r1 = rng.u01();
    r.r2 = rng.u01();
  }
  st.strategies.assign(n, 0.0);
  for (int64_t m = 1; m < n; ++m)
    st.strategies[m] = mixed_strategy(st.rewards[net.parent(m)], st.rewards[m]);
  st.edge_beliefs.assign(n, BeliefState{});
  st.own_records.assign(n, BeliefState{});
  st.visited.assign(n, 0);
  return st;
}

DelegationChain dig_trial(DigState& st, const DelegationNetwork& net,
                          const std::vector<double>& competences,
                          Rng& policy_rng, Rng& env_rng) {
  DelegationChain ch;
  ch.path.reserve(net.D + 1);
  ch.path.push_back(0);
  int64_t j = 0;
  int budget = net.D;
  int64_t executor = -1;
  const double w = st.ratchet_weight;

  for (;;) {
    if (budget == 0 || net.is_leaf(j)) {
      executor = j;
      break;
    }
    const int64_t base = net.first_child(j);
    int64_t m = base;
    double best_score = -1.0;
    for (int i = 0; i < net.K; ++i) {
      const int64_t ch_id = base + i;
      const BeliefState& eb = st.edge_beliefs[ch_id];
      const double p =
          dig_delegation_prob(st.strategies[ch_id], eb.alpha - 1.0, w);
      const double score = p * policy_rng.beta(eb.alpha, eb.beta);
      if (score > best_score) {
        best_score = score;
        m = ch_id;
      }
    }
    const double p =
        dig_delegation_prob(st.strategies[m], st.edge_beliefs[m].alpha - 1.0, w);
    if (policy_rng.u01() < p) {
      ch.path.push_back(m);
      --budget;
      if (st.visited[m]) {
        // Repeat recipient: refresh the triple from current evidence.
        if (!net.is_leaf(m)) {
          const int64_t mb = net.first_child(m);
          double cmax = 0.0;
          for (int i = 0; i < net.K; ++i) {
            const BeliefState& gb = st.edge_beliefs[mb + i];
            cmax = std::max(cmax, policy_rng.beta(gb.alpha, gb.beta));
          }
          st.rewards[m].r0 = cmax;
        } else {
          st.rewards[m].r0 = 0.0;
        }
        st.rewards[m].r1 = st.own_records[m].mean();
        st.rewards[m].r2 = policy_rng.u01();
        st.strategies[m] = mixed_strategy(st.rewards[j], st.rewards[m]);
      } else {
        st.visited[m] = 1;
      }
      if (st.rewards[m].r0 <= st.rewards[m].r1) {
        executor = m;  // own value dominates continuation: absorbing execute
        break;
      }
      j = m;
    } else {
      executor = j;  // quitting move; j disengages its delegates
      if (!net.is_leaf(j)) {
        const int64_t b2 = net.first_child(j);
        for (int i = 0; i < net.K; ++i) st.visited[b2 + i] = 0;
      }
      break;
    }
  }

  ch.outcome = execute_task(competences[executor], env_rng);
  st.own_records[executor] = update_belief(st.own_records[executor], ch.outcome);
  for (size_t i = 1; i < ch.path.size(); ++i) {
    BeliefState& eb = st.edge_beliefs[ch.path[i]];
    eb = update_belief(eb, ch.outcome);
  }
  return ch;
}

}  // namespace delegsim
