#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "protree/canonical.hpp"
#include "protree/error.hpp"
#include "protree/tree.hpp"

namespace protree {

struct ShapeReport {
  std::size_t leaf_count = 0;
  std::size_t height = 0;
  bool is_proper_binary = false;
  bool is_complete_binary = false;
  std::vector<std::size_t> outdegree_sequence;  // ascending
};

inline bool is_proper_binary(const RootedTree& tree) {
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const auto d = tree.outdegree(VertexId{static_cast<std::uint32_t>(v)});
    if (d != 0 && d != 2) return false;
  }
  return true;
}

inline std::vector<std::size_t> outdegree_sequence(const RootedTree& tree) {
  std::vector<std::size_t> seq(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v) seq[v] = tree.outdegree(VertexId{static_cast<std::uint32_t>(v)});
  std::sort(seq.begin(), seq.end());
  return seq;
}

inline std::size_t height(const RootedTree& tree) {
  std::vector<std::size_t> depth(tree.size(), 0);
  std::size_t h = 0;
  for (const VertexId v : tree.preorder()) {
    for (const VertexId c : tree.children(v)) depth[c.value()] = depth[v.value()] + 1;
    h = std::max(h, depth[v.value()]);
  }
  return h;
}

inline ShapeReport classify(const RootedTree& tree) {
  ShapeReport r;
  r.leaf_count = tree.leaf_count();
  r.height = height(tree);
  r.is_proper_binary = is_proper_binary(tree);
  r.is_complete_binary = r.is_proper_binary && r.height < 64 && r.leaf_count == (std::size_t{1} << r.height);
  r.outdegree_sequence = outdegree_sequence(tree);
  return r;
}

struct SaturatedVertex {
  VertexId vertex;
  unsigned exponent = 0;  // T(vertex) is complete with 2^exponent leaves
};

/// Weakly decreasing exponents of the saturated subtrees.
struct PartitionVector {
  std::vector<unsigned> exponents;

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

  bool has_repeats() const {
    return std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end();
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(exponents[i]);
    }
    return s + ")";
  }
};

namespace detail {

inline void require_proper_binary(const RootedTree& tree, const char* what) {
  if (!is_proper_binary(tree)) throw DomainError(std::string(what) + ": tree is not proper binary");
}

/// For each vertex, the height of T(v) if it is a complete binary tree, else -1.
inline std::vector<int> complete_heights(const RootedTree& tree) {
  std::vector<int> h(tree.size(), -1);
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto kids = tree.children(*it);
    if (kids.empty()) {
      h[it->value()] = 0;
    } else if (kids.size() == 2) {
      const int a = h[kids[0].value()], b = h[kids[1].value()];
      if (a >= 0 && a == b) h[it->value()] = a + 1;
    }
  }
  return h;
}

}  // namespace detail

/// Vertices whose subtree is complete binary while no proper ancestor's is.
/// Listed in canonical preorder; their leaf sets partition the leaves of the tree.
inline std::vector<SaturatedVertex> saturated_vertices(const RootedTree& tree) {
  detail::require_proper_binary(tree, "saturated_vertices");
  const auto h = detail::complete_heights(tree);
  std::vector<SaturatedVertex> out;
  std::vector<VertexId> stack{tree.root()};
  const auto index = canonical_index(tree);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (h[v.value()] >= 0) {
      out.push_back({v, static_cast<unsigned>(h[v.value()])});
      continue;
    }
    for (const VertexId c : tree.children(v)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [&](const SaturatedVertex& a, const SaturatedVertex& b) { return index[a.vertex.value()] < index[b.vertex.value()]; });
  return out;
}

inline PartitionVector partition_vector(const RootedTree& tree) {
  PartitionVector m;
  for (const auto& s : saturated_vertices(tree)) m.exponents.push_back(s.exponent);
  std::sort(m.exponents.begin(), m.exponents.end(), std::greater<>());
  return m;
}

}  // namespace protree
