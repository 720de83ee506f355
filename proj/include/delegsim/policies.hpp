#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "delegsim/beliefs.hpp"
#include "delegsim/environment.hpp"
#include "delegsim/indices.hpp"
#include "delegsim/network.hpp"
#include "delegsim/rng.hpp"

namespace delegsim {

enum class PolicyKind { UCB1, DID, EGREEDY, DIG };

inline constexpr PolicyKind kAllPolicies[] = {PolicyKind::UCB1, PolicyKind::DID,
                                              PolicyKind::EGREEDY, PolicyKind::DIG};

const char* policy_name(PolicyKind k);
std::optional<PolicyKind> policy_from_name(std::string_view name);
// Stream tag of the policy's RNG (see derive_seed).
uint64_t policy_tag(PolicyKind k);

// One trial's delegation path from the root; the executor is the last entry.
struct DelegationChain {
  std::vector<int64_t> path;  // path[0] == 0 always
  bool outcome = false;

  int64_t executor() const { return path.back(); }
};

// Index of the maximal score; ties break to the lowest index. All policy
// selections go through this so the tie-break contract holds everywhere.
int64_t argmax_lowest(const std::vector<double>& scores);

// Shared state of the three bandit-style policies. Edge beliefs are indexed
// by the child id of the directed tree edge (entry 0 unused). epsilon is the
// EGREEDY exploration probability; discount drives DID's index. Scalar per
// run: one epsilon, one delta.
struct BanditPolicyState {
  std::vector<BeliefState> edge_beliefs;
  double epsilon = 0.0;
  DiscountParams discount{0.9, 0.1053605156578263};
  int64_t trial_counter = 0;   // trials elapsed
  int64_t explore_count = 0;   // EGREEDY random-branch selections taken
  std::vector<double> scratch; // per-level score buffer
};

BanditPolicyState make_bandit_state(const DelegationNetwork& net, double epsilon,
                                    double delta);

// One trial of UCB1 / DID / EGREEDY: starting at the root, the holder scores
// each child edge (UCB1 score, Gittins approximation, or posterior mean) and
// delegates to the argmax; EGREEDY replaces the argmax by a uniformly random
// child with probability epsilon. At depth D the holder executes. The terminal
// outcome (drawn from env_rng) updates every traversed edge's belief.
DelegationChain bandit_trial(PolicyKind kind, BanditPolicyState& st,
                             const DelegationNetwork& net,
                             const std::vector<double>& competences,
                             Rng& policy_rng, Rng& env_rng);

}  // namespace delegsim
