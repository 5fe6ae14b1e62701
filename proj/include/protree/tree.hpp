#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "protree/error.hpp"

namespace protree {

/// Handle into one tree's vertex arena. Only meaningful for the tree that issued it.
struct VertexId {
  std::uint32_t index = 0;

  constexpr std::size_t value() const noexcept { return index; }
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// A parent -> child link.
struct Edge {
  VertexId parent;
  VertexId child;

  friend constexpr bool operator==(Edge, Edge) = default;
};

/// Unordered rooted tree stored as an arena of vertices.
///
/// Values are immutable once built; every rewrite produces a new tree. Child
/// order is storage order only and carries no meaning (see canonical.hpp for a
/// deterministic order). Unary vertices are allowed.
class RootedTree {
 public:
  /// The single-vertex tree.
  RootedTree() : parent_(1, kNone), child_begin_{0, 0} {}

  /// Builds a tree from parent links, one entry per vertex; exactly one entry
  /// must be empty (the root). Children are stored in increasing index order.
  /// Throws DomainError if the links do not describe a tree.
  static RootedTree from_parents(std::span<const std::optional<VertexId>> parents) {
    const std::size_t n = parents.size();
    if (n == 0) throw DomainError("tree must have at least one vertex");
    RootedTree t;
    t.parent_.assign(n, kNone);
    std::optional<VertexId> root;
    std::vector<std::uint32_t> degree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (!parents[v]) {
        if (root) throw DomainError("tree has more than one root");
        root = VertexId{static_cast<std::uint32_t>(v)};
        continue;
      }
      const std::size_t p = parents[v]->value();
      if (p >= n) throw DomainError("parent index out of range");
      if (p == v) throw DomainError("vertex is its own parent");
      t.parent_[v] = static_cast<std::uint32_t>(p);
      ++degree[p];
    }
    if (!root) throw DomainError("tree has no root");
    t.root_ = *root;
    t.child_begin_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) t.child_begin_[v + 1] = t.child_begin_[v] + degree[v];
    t.children_.assign(n - 1, VertexId{});
    std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (t.parent_[v] != kNone) t.children_[fill[t.parent_[v]]++] = VertexId{static_cast<std::uint32_t>(v)};
    }
    // n - 1 edges and a single root: acyclic iff everything is reachable from the root.
    if (t.preorder().size() != n) throw DomainError("parent links contain a cycle");
    return t;
  }

  VertexId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return parent_.size(); }

  std::optional<VertexId> parent(VertexId v) const {
    const auto p = parent_.at(v.value());
    if (p == kNone) return std::nullopt;
    return VertexId{p};
  }

  std::span<const VertexId> children(VertexId v) const {
    const auto i = v.value();
    return {children_.data() + child_begin_.at(i), children_.data() + child_begin_.at(i + 1)};
  }

  std::size_t outdegree(VertexId v) const { return child_begin_.at(v.value() + 1) - child_begin_[v.value()]; }
  bool is_leaf(VertexId v) const { return outdegree(v) == 0; }
  bool contains(VertexId v) const noexcept { return v.value() < size(); }

  std::size_t leaf_count() const {
    std::size_t leaves = 0;
    for (std::size_t v = 0; v < size(); ++v) leaves += child_begin_[v] == child_begin_[v + 1];
    return leaves;
  }

  /// Vertices in storage-order preorder from the root.
  std::vector<VertexId> preorder() const {
    std::vector<VertexId> order;
    order.reserve(size());
    std::vector<VertexId> stack{root_};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      const auto kids = children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return order;
  }

  std::vector<std::optional<VertexId>> parent_links() const {
    std::vector<std::optional<VertexId>> links(size());
    for (std::size_t v = 0; v < size(); ++v) {
      if (parent_[v] != kNone) links[v] = VertexId{parent_[v]};
    }
    return links;
  }

  std::size_t depth(VertexId v) const {
    std::size_t d = 0;
    for (auto p = parent_.at(v.value()); p != kNone; p = parent_[p]) ++d;
    return d;
  }

  /// True if `a` is a proper ancestor of `b`.
  bool is_ancestor(VertexId a, VertexId b) const {
    for (auto p = parent_.at(b.value()); p != kNone; p = parent_[p]) {
      if (p == a.index) return true;
    }
    return false;
  }

  /// Vertices strictly above `v`, nearest first.
  std::vector<VertexId> ancestors(VertexId v) const {
    std::vector<VertexId> up;
    for (auto p = parent_.at(v.value()); p != kNone; p = parent_[p]) up.push_back(VertexId{p});
    return up;
  }

  std::size_t distance(VertexId a, VertexId b) const {
    std::size_t da = depth(a), db = depth(b);
    std::size_t steps = 0;
    while (da > db) a = VertexId{parent_[a.value()]}, --da, ++steps;
    while (db > da) b = VertexId{parent_[b.value()]}, --db, ++steps;
    while (a != b) {
      a = VertexId{parent_[a.value()]};
      b = VertexId{parent_[b.value()]};
      steps += 2;
    }
    return steps;
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  VertexId root_{};
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<VertexId> children_;
};

/// Incremental construction with explicit child order (used where "left" and
/// "right" matter during a construction, e.g. almost complete trees).
class TreeBuilder {
 public:
  VertexId add_root() {
    if (!parents_.empty()) throw DomainError("root already added");
    parents_.emplace_back();
    kids_.emplace_back();
    return VertexId{0};
  }

  VertexId add_child(VertexId parent) {
    if (parent.value() >= parents_.size()) throw DomainError("unknown parent");
    const VertexId v{static_cast<std::uint32_t>(parents_.size())};
    parents_.emplace_back(parent);
    kids_.emplace_back();
    kids_[parent.value()].push_back(v);
    return v;
  }

  const std::vector<VertexId>& children(VertexId v) const { return kids_.at(v.value()); }
  std::optional<VertexId> parent(VertexId v) const { return parents_.at(v.value()); }
  std::size_t size() const noexcept { return parents_.size(); }

  /// Leaves in left-to-right order.
  std::vector<VertexId> leaves_left_to_right(VertexId from = VertexId{0}) const {
    std::vector<VertexId> out;
    std::vector<VertexId> stack{from};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      const auto& kids = kids_[v.value()];
      if (kids.empty()) out.push_back(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  /// Child order is kept: vertices are renumbered in preorder so storage order
  /// follows insertion order.
  RootedTree build() const {
    if (parents_.empty()) throw DomainError("empty builder");
    std::vector<std::uint32_t> renumber(parents_.size());
    std::vector<VertexId> order;
    order.reserve(parents_.size());
    std::vector<VertexId> stack{VertexId{0}};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      renumber[v.value()] = static_cast<std::uint32_t>(order.size());
      order.push_back(v);
      const auto& kids = kids_[v.value()];
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    std::vector<std::optional<VertexId>> links(parents_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& p = parents_[order[i].value()];
      if (p) links[i] = VertexId{renumber[p->value()]};
    }
    return RootedTree::from_parents(links);
  }

 private:
  std::vector<std::optional<VertexId>> parents_;
  std::vector<std::vector<VertexId>> kids_;
};

}  // namespace protree
