#include "delegsim/policies.hpp"

#include <stdexcept>

namespace delegsim {

const char* policy_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::UCB1: return "ucb1";
    case PolicyKind::DID: return "did";
    case PolicyKind::EGREEDY: return "egreedy";
    case PolicyKind::DIG: return "dig";
  }
  return "?";
}

std::optional<PolicyKind> policy_from_name(std::string_view name) {
  if (name == "ucb1") return PolicyKind::UCB1;
  if (name == "did") return PolicyKind::DID;
  if (name == "egreedy") return PolicyKind::EGREEDY;
  if (name == "dig") return PolicyKind::DIG;
  return std::nullopt;
}

uint64_t policy_tag(PolicyKind k) {
  switch (k) {
    case PolicyKind::UCB1: return 1;
    case PolicyKind::DID: return 2;
    case PolicyKind::EGREEDY: return 3;
    case PolicyKind::DIG: return 4;
  }
  return 0;
}

int64_t argmax_lowest(const std::vector<double>& scores) {
  int64_t best = 0;
  for (int64_t i = 1; i < static_cast<int64_t>(scores.size()); ++i)
    if (scores[i] > scores[best]) best = i;
  return best;
}

BanditPolicyState make_bandit_state(const DelegationNetwork& net,
                                    double epsilon, double delta) {
  BanditPolicyState st;
  st.edge_beliefs.assign(net.n_agents, BeliefState{});
  st.epsilon = epsilon;
  st.discount = DiscountParams::from_delta(delta);
  return st;
}

DelegationChain bandit_trial(PolicyKind kind, BanditPolicyState& st,
                             const DelegationNetwork& net,
                             const std::vector<double>& competences,
                             Rng& policy_rng, Rng& env_rng) {
  if (kind == PolicyKind::DIG)
    throw std::invalid_argument("bandit_trial: DIG uses dig_trial");
  DelegationChain ch;
  ch.path.reserve(net.D + 1);
  ch.path.push_back(0);
  int64_t j = 0;
  const int64_t total_trials = st.trial_counter + 1;
  for (int level = 0; level < net.D; ++level) {
    if (net.is_leaf(j)) break;
    const int64_t base = net.first_child(j);
    if (kind == PolicyKind::EGREEDY && policy_rng.u01() < st.epsilon) {
      j = base + policy_rng.uniform_index(net.K);
      ++st.explore_count;
      ch.path.push_back(j);
      continue;
    }
    st.scratch.resize(net.K);
    for (int i = 0; i < net.K; ++i) {
      const BeliefState& b = st.edge_beliefs[base + i];
      switch (kind) {
        case PolicyKind::UCB1:
          st.scratch[i] = ucb1_score(b, total_trials);
          break;
        case PolicyKind::DID:
          st.scratch[i] = gittins_approx(b, st.discount);
          break;
        default:
          st.scratch[i] = b.mean();
          break;
      }
    }
    j = base + argmax_lowest(st.scratch);
    ch.path.push_back(j);
  }
  ch.outcome = execute_task(competences[j], env_rng);
  for (size_t i = 1; i < ch.path.size(); ++i) {
    BeliefState& b = st.edge_beliefs[ch.path[i]];
    b = update_belief(b, ch.outcome);
  }
  ++st.trial_counter;
  return ch;
}

}  // namespace delegsim
