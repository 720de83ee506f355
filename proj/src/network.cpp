#include "delegsim/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace delegsim {

int64_t complete_tree_size(int K, int D) {
  int64_t total = 0;
  int64_t level = 1;
  for (int d = 0; d <= D; ++d) {
    total += level;
    if (total > kNodeCap) return kNodeCap + 1;
    if (d < D) {
      if (level > (kNodeCap + 1) / K) return kNodeCap + 1;
      level *= K;
    }
  }
  return total;
}

int DelegationNetwork::depth_of(int64_t a) const {
  auto it = std::upper_bound(level_offset.begin(), level_offset.end(), a);
  return static_cast<int>(it - level_offset.begin()) - 1;
}

std::vector<int64_t> DelegationNetwork::neighbors(int64_t a) const {
  std::vector<int64_t> out;
  if (is_leaf(a)) return out;
  out.reserve(K);
  const int64_t base = first_child(a);
  for (int i = 0; i < K; ++i) out.push_back(base + i);
  return out;
}

DelegationNetwork generate_network(int K, int D) {
  if (K < 1) throw std::invalid_argument("generate_network: K must be >= 1");
  if (D < 0) throw std::invalid_argument("generate_network: D must be >= 0");
  const int64_t size = complete_tree_size(K, D);
  if (size > kNodeCap)
    throw std::invalid_argument(
        "generate_network: tree with K=" + std::to_string(K) +
        ", D=" + std::to_string(D) + " exceeds the node cap of " +
        std::to_string(kNodeCap));
  DelegationNetwork net;
  net.K = K;
  net.D = D;
  net.n_agents = size;
  net.level_offset.resize(D + 2);
  int64_t offset = 0;
  int64_t level = 1;
  for (int d = 0; d <= D; ++d) {
    net.level_offset[d] = offset;
    offset += level;
    level *= K;
  }
  net.level_offset[D + 1] = offset;
  return net;
}

}  // namespace delegsim
