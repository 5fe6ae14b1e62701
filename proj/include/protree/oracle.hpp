#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "protree/canonical.hpp"
#include "protree/error.hpp"
#include "protree/tree.hpp"

namespace protree {

inline constexpr std::size_t kMaxShapeLeaves = 22;
inline constexpr std::size_t kMaxMaterializedMaximizers = 16;

/// All non-isomorphic proper binary shapes by leaf count, built by pairing
/// smaller shapes and memoized per leaf count. Entries of one leaf count are
/// kept in canonical order, so every shape has a unique (leaves, index) name.
class ShapeCatalog {
 public:
  struct Entry {
    std::uint32_t left_leaves = 0;  // 0 for the single leaf
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t rank = 0;
    std::uint64_t security = 0;
  };

  const std::vector<Entry>& level(std::size_t leaves) {
    if (leaves == 0) throw DomainError("shape catalog: leaf count must be positive");
    if (leaves > kMaxShapeLeaves) throw SizeError("shape catalog: leaf count above " + std::to_string(kMaxShapeLeaves));
    while (levels_.size() <= leaves) grow();
    return levels_[leaves];
  }

  RootedTree materialize(std::size_t leaves, std::size_t index) {
    level(leaves);
    TreeBuilder b;
    struct Item {
      VertexId at;
      std::size_t leaves, index;
    };
    std::vector<Item> stack{{b.add_root(), leaves, index}};
    while (!stack.empty()) {
      const Item it = stack.back();
      stack.pop_back();
      if (it.leaves == 1) continue;
      const Entry& e = levels_[it.leaves][it.index];
      const VertexId l = b.add_child(it.at);
      const VertexId r = b.add_child(it.at);
      stack.push_back({r, it.leaves - e.left_leaves, e.right});
      stack.push_back({l, e.left_leaves, e.left});
    }
    return b.build();
  }

 private:
  // Lexicographic comparison of the canonical strings of two catalogued shapes.
  int compare(std::size_t a, std::size_t i, std::size_t b, std::size_t j) const {
    if (a == b) return i < j ? -1 : (i > j ? 1 : 0);
    if (a == 1) return 1;  // 'L' sorts after '('
    if (b == 1) return -1;
    const Entry& x = levels_[a][i];
    const Entry& y = levels_[b][j];
    if (const int c = compare(x.left_leaves, x.left, y.left_leaves, y.left); c != 0) return c;
    return compare(a - x.left_leaves, x.right, b - y.left_leaves, y.right);
  }

  void grow() {
    const std::size_t n = levels_.size();
    if (n == 0) {
      levels_.emplace_back();
      return;
    }
    std::vector<Entry> out;
    if (n == 1) {
      out.push_back({});
    } else {
      for (std::size_t a = 1; a <= n - a; ++a) {
        const auto& lhs = levels_[a];
        const auto& rhs = levels_[n - a];
        for (std::size_t i = 0; i < lhs.size(); ++i) {
          for (std::size_t j = (a == n - a ? i : 0); j < rhs.size(); ++j) {
            const std::uint32_t rank = 1 + std::min(lhs[i].rank, rhs[j].rank);
            out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           rank, lhs[i].security + rhs[j].security + rank});
          }
        }
      }
      std::sort(out.begin(), out.end(), [&](const Entry& x, const Entry& y) {
        if (const int c = compare(x.left_leaves, x.left, y.left_leaves, y.left); c != 0) return c < 0;
        return compare(n - x.left_leaves, x.right, n - y.left_leaves, y.right) < 0;
      });
    }
    levels_.push_back(std::move(out));
  }

  std::vector<std::vector<Entry>> levels_;
};

/// Calls `visit` with every proper binary shape on `leaves` leaves, in canonical order.
inline void for_each_shape(std::size_t leaves, const std::function<void(const RootedTree&)>& visit) {
  ShapeCatalog catalog;
  const auto count = catalog.level(leaves).size();
  for (std::size_t i = 0; i < count; ++i) visit(catalog.materialize(leaves, i));
}

inline std::vector<RootedTree> enumerate_shapes(std::size_t leaves) {
  std::vector<RootedTree> out;
  for_each_shape(leaves, [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

inline std::size_t count_shapes(std::size_t leaves) {
  ShapeCatalog catalog;
  return catalog.level(leaves).size();
}

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Fraction reduced(std::uint64_t num, std::uint64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Fraction{num, den} : Fraction{num / g, den / g};
  }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct ShapeCensus {
  std::size_t leaves = 0;
  std::size_t total_shapes = 0;
  std::uint64_t max_security = 0;
  std::size_t maximizer_count = 0;
  Fraction maximizer_fraction;
  std::vector<RootedTree> maximizers;  // only filled for leaves <= kMaxMaterializedMaximizers
};

namespace detail {

inline ShapeCensus census_from(ShapeCatalog& catalog, std::size_t leaves) {
  const auto& entries = catalog.level(leaves);
  ShapeCensus c;
  c.leaves = leaves;
  c.total_shapes = entries.size();
  for (const auto& e : entries) c.max_security = std::max(c.max_security, e.security);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].security != c.max_security) continue;
    ++c.maximizer_count;
    if (leaves <= kMaxMaterializedMaximizers) c.maximizers.push_back(catalog.materialize(leaves, i));
  }
  c.maximizer_fraction = Fraction::reduced(c.maximizer_count, c.total_shapes);
  return c;
}

}  // namespace detail

inline ShapeCensus brute_force_extremes(std::size_t leaves) {
  ShapeCatalog catalog;
  return detail::census_from(catalog, leaves);
}

inline std::vector<ShapeCensus> census_table(std::size_t max_leaves) {
  ShapeCatalog catalog;
  std::vector<ShapeCensus> rows;
  for (std::size_t l = 1; l <= max_leaves; ++l) rows.push_back(detail::census_from(catalog, l));
  return rows;
}

/// Order guard for rooted-tree enumeration with outdegree bound k (nullopt = unbounded).
inline std::size_t max_enumeration_order(std::optional<std::size_t> k) {
  if (!k) return 11;
  switch (*k) {
    case 1: return 64;
    case 2: return 14;
    case 3: return 12;
    default: return 11;
  }
}

/// All non-isomorphic rooted trees by order with every outdegree at most k.
class RootedCatalog {
 public:
  struct Entry {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children;  // (order, index)
    std::string canonical;
    std::uint32_t root_rank = 0;
    std::uint32_t max_rank = 0;
  };

  explicit RootedCatalog(std::optional<std::size_t> k = std::nullopt) : k_(k) {
    if (k_ && *k_ == 0) throw DomainError("outdegree bound must be positive");
  }

  const std::vector<Entry>& level(std::size_t order) {
    if (order == 0) throw DomainError("tree order must be positive");
    if (order > max_enumeration_order(k_)) {
      throw SizeError("rooted tree enumeration: order above " + std::to_string(max_enumeration_order(k_)));
    }
    while (levels_.size() <= order) grow();
    return levels_[order];
  }

  RootedTree materialize(std::size_t order, std::size_t index) {
    level(order);
    TreeBuilder b;
    std::vector<std::tuple<VertexId, std::size_t, std::size_t>> stack{{b.add_root(), order, index}};
    while (!stack.empty()) {
      const auto [at, n, i] = stack.back();
      stack.pop_back();
      for (const auto& [m, j] : levels_[n][i].children) stack.emplace_back(b.add_child(at), m, j);
    }
    return b.build();
  }

 private:
  void grow() {
    const std::size_t n = levels_.size();
    if (n == 0) {
      levels_.emplace_back();
      return;
    }
    std::vector<Entry> out;
    // children as a nondecreasing list of (order, index) summing to n - 1
    std::vector<std::pair<std::uint32_t, std::uint32_t>> current;
    std::function<void(std::size_t, std::uint32_t, std::uint32_t)> extend = [&](std::size_t left, std::uint32_t m0,
                                                                                  std::uint32_t i0) {
      if (left == 0) {
        Entry e;
        e.children = current;
        std::vector<std::string> parts;
        std::uint32_t min_child = UINT32_MAX;
        for (const auto& [m, j] : current) {
          const Entry& c = levels_[m][j];
          parts.push_back(c.canonical);
          min_child = std::min(min_child, c.root_rank);
          e.max_rank = std::max(e.max_rank, c.max_rank);
        }
        std::sort(parts.begin(), parts.end(), canonical_less);
        if (parts.empty()) {
          e.canonical = "L";
        } else {
          e.canonical = "(";
          for (const auto& p : parts) e.canonical += p;
          e.canonical += ")";
          e.root_rank = 1 + min_child;
        }
        e.max_rank = std::max(e.max_rank, e.root_rank);
        out.push_back(std::move(e));
        return;
      }
      if (k_ && current.size() == *k_) return;
      for (std::uint32_t m = m0; m <= left; ++m) {
        for (std::uint32_t j = (m == m0 ? i0 : 0); j < levels_[m].size(); ++j) {
          current.emplace_back(m, j);
          extend(left - m, m, j);
          current.pop_back();
        }
      }
    };
    extend(n - 1, 1, 0);
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return canonical_less(a.canonical, b.canonical); });
    levels_.push_back(std::move(out));
  }

  std::optional<std::size_t> k_;
  std::vector<std::vector<Entry>> levels_;
};

/// Every non-isomorphic rooted tree of the given order with outdegrees at most
/// k (nullopt: unbounded), in canonical order.
inline std::vector<RootedTree> enumerate_kary_trees(std::size_t order, std::optional<std::size_t> k = std::nullopt) {
  RootedCatalog catalog(k);
  const auto count = catalog.level(order).size();
  std::vector<RootedTree> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(catalog.materialize(order, i));
  return out;
}

struct RootRankRecord {
  std::size_t order = 0;
  std::size_t trees = 0;            // size of the class
  std::uint32_t max_root_rank = 0;  // max over trees of the root rank
  std::uint32_t max_vertex_rank = 0;  // max over trees and vertices of the rank
  std::string witness;              // canonical string of a tree attaining max_root_rank
};

/// Exhaustive root-rank maxima over a class of rooted trees of one order:
///   k set:           proper k-ary trees (every outdegree is 0 or k)
///   root_degree set: trees whose root has exactly that outdegree
/// Both filters may be combined; with neither, all rooted trees.
inline RootRankRecord brute_force_max_root_rank(std::size_t order, std::optional<std::size_t> k = std::nullopt,
                                                std::optional<std::size_t> root_degree = std::nullopt) {
  if (k && *k < 1) throw DomainError("k must be positive");
  RootedCatalog catalog(k);
  const auto& entries = catalog.level(order);
  RootRankRecord rec;
  rec.order = order;
  for (const auto& e : entries) {
    if (root_degree && e.children.size() != *root_degree) continue;
    if (k) {
      // proper: recurse through the children list
      bool proper = true;
      std::vector<const RootedCatalog::Entry*> stack{&e};
      while (proper && !stack.empty()) {
        const auto* x = stack.back();
        stack.pop_back();
        if (!x->children.empty() && x->children.size() != *k) proper = false;
        for (const auto& [m, j] : x->children) stack.push_back(&catalog.level(m)[j]);
      }
      if (!proper) continue;
    }
    ++rec.trees;
    if (rec.trees == 1 || e.root_rank > rec.max_root_rank) {
      rec.max_root_rank = e.root_rank;
      rec.witness = e.canonical;
    }
    rec.max_vertex_rank = std::max(rec.max_vertex_rank, e.max_rank);
  }
  return rec;
}

/// Root-rank and vertex-rank maxima for each outdegree sequence among rooted
/// trees of one order with outdegrees at most k.
inline std::map<std::vector<std::size_t>, RootRankRecord> root_rank_by_outdegree_sequence(
    std::size_t order, std::optional<std::size_t> k = std::nullopt) {
  RootedCatalog catalog(k);
  const auto& entries = catalog.level(order);
  std::map<std::vector<std::size_t>, RootRankRecord> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::vector<std::size_t> seq;
    std::vector<const RootedCatalog::Entry*> stack{&e};
    while (!stack.empty()) {
      const auto* x = stack.back();
      stack.pop_back();
      seq.push_back(x->children.size());
      for (const auto& [m, j] : x->children) stack.push_back(&catalog.level(m)[j]);
    }
    std::sort(seq.begin(), seq.end());
    auto& rec = out[seq];
    rec.order = order;
    ++rec.trees;
    if (rec.trees == 1 || e.root_rank > rec.max_root_rank) {
      rec.max_root_rank = e.root_rank;
      rec.witness = e.canonical;
    }
    rec.max_vertex_rank = std::max(rec.max_vertex_rank, e.max_rank);
  }
  return out;
}

}  // namespace protree
