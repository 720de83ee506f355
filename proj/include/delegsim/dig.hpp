#pragma once

#include <cstdint>
#include <vector>

#include "delegsim/beliefs.hpp"
#include "delegsim/network.hpp"
#include "delegsim/policies.hpp"
#include "delegsim/rng.hpp"

namespace delegsim {

// One agent's quitting-game payoff row: r0 = continuation value (what its own
// delegates look worth), r1 = own-execution value, r2 = anchor payoff scaling
// the strategy ratio. Unordered; components in [0,1].
struct RewardTriple {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// x = (rj.r1 - rk.r0) / (rj.r2 - rk.r0), clamped to [0,1]; |denominator|
// below 1e-9 yields 0.
double mixed_strategy(const RewardTriple& rj, const RewardTriple& rk);

// Delegation probability of an edge with game strategy x and s recorded
// successes: min(1, (w*x + s)/(w + s)). The game strategy seeds the
// probability and observed successes ratchet it toward 1; failures never
// reduce it below the seed (the edge belief's sampled value handles
// pessimism during selection instead).
double dig_delegation_prob(double x, double successes, double weight);

// Quitting-game delegation state. Per-edge entries are indexed by the child
// id of the directed edge (entry 0 unused). visited[m] marks m as a member of
// its parent's engaged set S_parent. own_records tracks each agent's own
// execution outcomes, feeding the r1 refresh.
struct DigState {
  std::vector<RewardTriple> rewards;      // per agent
  std::vector<double> strategies;         // x on edge parent(m) -> m
  std::vector<BeliefState> edge_beliefs;  // Beta counts on edge parent(m) -> m
  std::vector<BeliefState> own_records;   // per agent, own executions
  std::vector<uint8_t> visited;           // m in S_parent(m)
  double ratchet_weight = 0.25;
};

// Triples drawn as three i.i.d. Uniform(0,1) per agent in id order; strategies
// computed for every edge; edge beliefs and own records at Beta(1,1); visited
// sets empty.
DigState dig_init(const DelegationNetwork& net, Rng& rng);

// One quitting-game trial from the root with depth budget D:
//   selection  the holder scores each child by delegation_prob * a posterior
//              sample of the edge belief and takes the argmax;
//   coin       with that child's delegation probability the task moves, else
//              the holder executes (the quitting move) and resets its S set;
//   learn      a repeat recipient refreshes its triple from current evidence
//              (r0 = best sampled child edge, r1 = own-record mean, r2 fresh
//              uniform) and recomputes its strategy; any recipient then
//              executes if r0 <= r1 and otherwise delegates onward with the
//              remaining budget;
//   terminal   exhausted budget or a leaf forces execution.
// The outcome (drawn from env_rng) updates the executor's own record and
// every traversed edge's belief.
DelegationChain dig_trial(DigState& st, const DelegationNetwork& net,
                          const std::vector<double>& competences,
                          Rng& policy_rng, Rng& env_rng);

}  // namespace delegsim
