#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "protree/tree.hpp"

namespace protree {

/// Total order on canonical serializations: shorter strings first (so leaves
/// come before any internal vertex), ties broken lexicographically. Under this
/// order "(L(LL))" is the canonical three-leaf shape.
inline bool canonical_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace detail {

struct CanonicalData {
  std::vector<std::string> text;               // canonical serialization of each subtree
  std::vector<std::vector<VertexId>> children;  // children in canonical order
};

inline CanonicalData canonical_data(const RootedTree& tree) {
  CanonicalData data;
  data.text.resize(tree.size());
  data.children.resize(tree.size());
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    const auto kids = tree.children(v);
    if (kids.empty()) {
      data.text[v.value()] = "L";
      continue;
    }
    auto& sorted = data.children[v.value()];
    sorted.assign(kids.begin(), kids.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](VertexId a, VertexId b) {
      return canonical_less(data.text[a.value()], data.text[b.value()]);
    });
    std::size_t len = 2;
    for (const VertexId c : sorted) len += data.text[c.value()].size();
    std::string s;
    s.reserve(len);
    s.push_back('(');
    for (const VertexId c : sorted) {
      s += data.text[c.value()];
      // child strings are no longer needed once folded into the parent
      std::string().swap(data.text[c.value()]);
    }
    s.push_back(')');
    data.text[v.value()] = std::move(s);
  }
  return data;
}

}  // namespace detail

/// Canonical serialization of the whole tree. Two trees are isomorphic (as
/// unordered rooted trees) iff these strings are equal.
inline std::string canonical_string(const RootedTree& tree) {
  return std::move(detail::canonical_data(tree).text[tree.root().value()]);
}

/// Arena ids of `tree` listed in canonical preorder. Position i in this list is
/// the public "preorder index" of a vertex.
inline std::vector<VertexId> canonical_order(const RootedTree& tree) {
  const auto data = detail::canonical_data(tree);
  std::vector<VertexId> order;
  order.reserve(tree.size());
  std::vector<VertexId> stack{tree.root()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& kids = data.children[v.value()];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

/// Inverse of canonical_order: arena id -> preorder index.
inline std::vector<std::size_t> canonical_index(const RootedTree& tree) {
  const auto order = canonical_order(tree);
  std::vector<std::size_t> index(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i].value()] = i;
  return index;
}

/// Isomorphic copy whose arena ids are canonical preorder indices and whose
/// children are stored in canonical order. Idempotent.
inline RootedTree canonical_form(const RootedTree& tree) {
  const auto order = canonical_order(tree);
  std::vector<std::size_t> index(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i].value()] = i;
  std::vector<std::optional<VertexId>> links(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (auto p = tree.parent(order[i])) links[i] = VertexId{static_cast<std::uint32_t>(index[p->value()])};
  }
  return RootedTree::from_parents(links);
}

inline bool is_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.size() != b.size() || a.leaf_count() != b.leaf_count()) return false;
  return canonical_string(a) == canonical_string(b);
}

}  // namespace protree
