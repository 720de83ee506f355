#pragma once

#include <cstdint>
#include <vector>

namespace delegsim {

inline constexpr int64_t kNodeCap = 1'000'000;

// Complete K-ary rooted delegation tree with levels 0..D, agent ids in heap
// order: children of a are K*a+1 .. K*a+K. The structure is implicit; only
// per-level offsets are stored.
struct DelegationNetwork {
  int K = 1;
  int D = 0;
  int64_t n_agents = 1;
  std::vector<int64_t> level_offset;  // size D+2; level_offset[d] = first id at depth d

  int64_t first_child(int64_t a) const { return static_cast<int64_t>(K) * a + 1; }
  int64_t parent(int64_t a) const { return (a - 1) / K; }
  bool is_leaf(int64_t a) const { return first_child(a) >= n_agents; }
  int depth_of(int64_t a) const;
  // Delegation candidates: the K children, empty at depth D.
  std::vector<int64_t> neighbors(int64_t a) const;
};

// Number of agents in a complete K-ary tree of depth D; values above kNodeCap
// are reported as kNodeCap+1 (exact count not needed past the cap).
int64_t complete_tree_size(int K, int D);

// Throws std::invalid_argument for K < 1, D < 0, or size > kNodeCap.
DelegationNetwork generate_network(int K, int D);

}  // namespace delegsim
