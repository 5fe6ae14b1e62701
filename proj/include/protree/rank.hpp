#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "protree/tree.hpp"

namespace protree {

/// Protection number of every vertex of one tree, indexed by VertexId.
///
/// rank(leaf) = 0 and rank(v) = 1 + min over children, which is the distance
/// from v to its nearest leaf descendant.
class RankTable {
 public:
  explicit RankTable(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {}

  std::uint32_t operator[](VertexId v) const { return ranks_.at(v.value()); }
  std::size_t size() const noexcept { return ranks_.size(); }
  const std::vector<std::uint32_t>& values() const noexcept { return ranks_; }

  std::uint64_t sum() const {
    std::uint64_t total = 0;
    for (auto r : ranks_) total += r;
    return total;
  }

  std::uint32_t max() const { return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end()); }

 private:
  std::vector<std::uint32_t> ranks_;
};

inline RankTable all_ranks(const RootedTree& tree) {
  const auto order = tree.preorder();
  std::vector<std::uint32_t> ranks(tree.size(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto kids = tree.children(*it);
    if (kids.empty()) continue;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (const VertexId c : kids) best = std::min(best, ranks[c.value()]);
    ranks[it->value()] = best + 1;
  }
  return RankTable(std::move(ranks));
}

/// Sum of all protection numbers.
inline std::uint64_t security(const RootedTree& tree) { return all_ranks(tree).sum(); }

/// Number of vertices of rank at least `level`. Level 2 is the classical
/// "protected" count; level 0 is the order of the tree.
inline std::size_t protected_count(const RootedTree& tree, std::uint32_t level) {
  const auto ranks = all_ranks(tree);
  return static_cast<std::size_t>(
      std::count_if(ranks.values().begin(), ranks.values().end(), [level](auto r) { return r >= level; }));
}

}  // namespace protree
