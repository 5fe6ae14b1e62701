#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "protree/canonical.hpp"
#include "protree/construct.hpp"
#include "protree/error.hpp"
#include "protree/rank.hpp"
#include "protree/shape.hpp"
#include "protree/trace.hpp"
#include "protree/tree.hpp"

namespace protree {

/// Two saturated vertices of equal rank together with their parents (u0, w0)
/// and siblings (u1, w1).
struct SwitchContext {
  VertexId u, w, u0, w0, u1, w1;

  /// Fills in parents and siblings from the tree. Throws GuardError when either
  /// vertex is the root or its parent is not binary.
  static SwitchContext derive(const RootedTree& tree, VertexId u, VertexId w) {
    auto family = [&](VertexId v, VertexId& parent, VertexId& sibling) {
      if (!tree.contains(v)) throw GuardError("switch context: vertex out of range");
      const auto p = tree.parent(v);
      if (!p) throw GuardError("switch context: vertex is the root");
      const auto kids = tree.children(*p);
      if (kids.size() != 2) throw GuardError("switch context: parent is not binary");
      parent = *p;
      sibling = kids[0] == v ? kids[1] : kids[0];
    };
    SwitchContext ctx{u, w, {}, {}, {}, {}};
    family(u, ctx.u0, ctx.u1);
    family(w, ctx.w0, ctx.w1);
    return ctx;
  }
};

/// The four guarded subtree exchanges.
enum class SwitchRule { disjoint, nested_high_sibling, nested_low_sibling, spine_reinsert };

inline std::string rule_name(SwitchRule r) {
  switch (r) {
    case SwitchRule::disjoint: return "switch_disjoint";
    case SwitchRule::nested_high_sibling: return "switch_nested_high_sibling";
    case SwitchRule::nested_low_sibling: return "switch_nested_low_sibling";
    case SwitchRule::spine_reinsert: return "spine_reinsert";
  }
  return "?";
}

/// A rewritten tree plus the parent->child edges that were removed and added.
/// Vertex ids are shared between the input tree and `tree`.
struct Rewrite {
  RootedTree tree;
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

namespace detail {

inline Rewrite apply_edits(const RootedTree& tree, std::vector<Edge> removed, std::vector<Edge> added) {
  auto links = tree.parent_links();
  for (const Edge& e : removed) {
    if (links.at(e.child.value()) != e.parent) throw std::logic_error("rewrite removes a missing edge");
    links[e.child.value()].reset();
  }
  for (const Edge& e : added) {
    if (links.at(e.child.value())) throw std::logic_error("rewrite gives a vertex two parents");
    links[e.child.value()] = e.parent;
  }
  return {RootedTree::from_parents(links), std::move(removed), std::move(added)};
}

/// Ranks and completeness of one proper binary tree.
struct BinaryAnalysis {
  RankTable ranks;
  std::vector<int> complete;  // height of T(v) if complete, else -1

  explicit BinaryAnalysis(const RootedTree& tree) : ranks(all_ranks(tree)), complete(complete_heights(tree)) {}

  bool saturated(const RootedTree& tree, VertexId v) const {
    if (complete[v.value()] < 0) return false;
    const auto p = tree.parent(v);
    return !p || complete[p->value()] < 0;
  }
};

inline BinaryAnalysis check_switch(const RootedTree& tree, const SwitchContext& ctx) {
  require_proper_binary(tree, "switch");
  for (const VertexId v : {ctx.u, ctx.w, ctx.u0, ctx.w0, ctx.u1, ctx.w1}) {
    if (!tree.contains(v)) throw GuardError("switch context: vertex out of range");
  }
  if (ctx.u == ctx.w) throw GuardError("switch context: u and w must differ");
  const auto derived = SwitchContext::derive(tree, ctx.u, ctx.w);
  if (derived.u0 != ctx.u0 || derived.w0 != ctx.w0 || derived.u1 != ctx.u1 || derived.w1 != ctx.w1) {
    throw GuardError("switch context: parents/siblings do not match the tree");
  }
  BinaryAnalysis a(tree);
  if (!a.saturated(tree, ctx.u) || !a.saturated(tree, ctx.w)) throw GuardError("switch requires saturated u and w");
  if (a.ranks[ctx.u] != a.ranks[ctx.w]) throw GuardError("switch requires rank(u) = rank(w)");
  return a;
}

inline void check_nested(const RootedTree& tree, const SwitchContext& ctx) {
  if (!tree.is_ancestor(ctx.u0, ctx.w0)) throw GuardError("nested switch requires u0 to be a proper ancestor of w0");
}

/// T - u u0 - w1 w0 + u w0 + w1 u0: exchange the subtrees T(u) and T(w1).
inline Rewrite exchange(const RootedTree& tree, const SwitchContext& ctx) {
  if (ctx.u0 == ctx.w0) return {tree, {}, {}};  // u and w are siblings: w1 = u
  return apply_edits(tree, {{ctx.u0, ctx.u}, {ctx.w0, ctx.w1}}, {{ctx.w0, ctx.u}, {ctx.u0, ctx.w1}});
}

}  // namespace detail

/// Neither parent is an ancestor of the other and rank(w1) >= rank(u1).
inline Rewrite rewrite_switch_disjoint(const RootedTree& tree, const SwitchContext& ctx) {
  const auto a = detail::check_switch(tree, ctx);
  if (tree.is_ancestor(ctx.u0, ctx.w0) || tree.is_ancestor(ctx.w0, ctx.u0)) {
    throw GuardError("switch_disjoint: disjoint required (one parent is an ancestor of the other)");
  }
  if (a.ranks[ctx.w1] < a.ranks[ctx.u1]) throw GuardError("switch_disjoint: requires rank(w1) >= rank(u1)");
  return detail::exchange(tree, ctx);
}

/// u0 is a proper ancestor of w0 and rank(w1) >= rank(u).
inline Rewrite rewrite_switch_nested_high_sibling(const RootedTree& tree, const SwitchContext& ctx) {
  const auto a = detail::check_switch(tree, ctx);
  detail::check_nested(tree, ctx);
  if (a.ranks[ctx.w1] < a.ranks[ctx.u]) throw GuardError("switch_nested_high_sibling: requires rank(w1) >= rank(u)");
  return detail::exchange(tree, ctx);
}

/// u0 is a proper ancestor of w0, rank(w1) <= rank(u) - 1, and either u0 is the
/// root or its parent v1 has rank(v1) <= 2 + rank(w1).
inline Rewrite rewrite_switch_nested_low_sibling(const RootedTree& tree, const SwitchContext& ctx) {
  const auto a = detail::check_switch(tree, ctx);
  detail::check_nested(tree, ctx);
  if (a.ranks[ctx.w1] + 1 > a.ranks[ctx.u]) throw GuardError("switch_nested_low_sibling: requires rank(w1) <= rank(u) - 1");
  if (const auto v1 = tree.parent(ctx.u0); v1 && a.ranks[*v1] > 2 + a.ranks[ctx.w1]) {
    throw GuardError("switch_nested_low_sibling: rank(v1) > 2 + rank(w1); use spine_reinsert");
  }
  return detail::exchange(tree, ctx);
}

/// u0 is a proper non-root ancestor of w0, rank(w1) < rank(u) and rank(v1) >
/// rank(w1) for the parent v1 of u0. Detaches w0 (keeping w1), hangs w from
/// w_p = parent(w0), and splices w0 into the root path of u0: directly below
/// the first v_{s+1} (s >= 1) with rank <= rank(w1), or above the root if no
/// such vertex exists.
inline Rewrite rewrite_spine_reinsert(const RootedTree& tree, const SwitchContext& ctx) {
  const auto a = detail::check_switch(tree, ctx);
  detail::check_nested(tree, ctx);
  if (a.ranks[ctx.w1] >= a.ranks[ctx.u]) throw GuardError("spine_reinsert: requires rank(w1) < rank(u)");
  const auto path = tree.ancestors(ctx.u0);  // v1, ..., vt
  if (path.empty()) throw GuardError("spine_reinsert: u0 must not be the root");
  const auto low = a.ranks[ctx.w1];
  if (a.ranks[path[0]] <= low) throw GuardError("spine_reinsert: requires rank(v1) > rank(w1)");
  const auto wp = tree.parent(ctx.w0);
  if (!wp) throw GuardError("spine_reinsert: w0 has no parent");

  for (std::size_t j = 1; j < path.size(); ++j) {
    if (a.ranks[path[j]] <= low) {
      const VertexId above = path[j], below = path[j - 1];
      return detail::apply_edits(tree, {{ctx.w0, ctx.w}, {*wp, ctx.w0}, {above, below}},
                                 {{above, ctx.w0}, {ctx.w0, below}, {*wp, ctx.w}});
    }
  }
  return detail::apply_edits(tree, {{ctx.w0, ctx.w}, {*wp, ctx.w0}}, {{ctx.w0, path.back()}, {*wp, ctx.w}});
}

inline Rewrite apply_switch(const RootedTree& tree, SwitchRule rule, const SwitchContext& ctx) {
  switch (rule) {
    case SwitchRule::disjoint: return rewrite_switch_disjoint(tree, ctx);
    case SwitchRule::nested_high_sibling: return rewrite_switch_nested_high_sibling(tree, ctx);
    case SwitchRule::nested_low_sibling: return rewrite_switch_nested_low_sibling(tree, ctx);
    case SwitchRule::spine_reinsert: return rewrite_spine_reinsert(tree, ctx);
  }
  throw std::logic_error("unknown switch rule");
}

inline RootedTree switch_disjoint(const RootedTree& tree, const SwitchContext& ctx) {
  return rewrite_switch_disjoint(tree, ctx).tree;
}
inline RootedTree switch_nested_high_sibling(const RootedTree& tree, const SwitchContext& ctx) {
  return rewrite_switch_nested_high_sibling(tree, ctx).tree;
}
inline RootedTree switch_nested_low_sibling(const RootedTree& tree, const SwitchContext& ctx) {
  return rewrite_switch_nested_low_sibling(tree, ctx).tree;
}
inline RootedTree spine_reinsert(const RootedTree& tree, const SwitchContext& ctx) {
  return rewrite_spine_reinsert(tree, ctx).tree;
}

/// Picks the rule and orientation for a pair of equal-rank saturated vertices:
/// disjoint parents use switch_disjoint (oriented so rank(w1) >= rank(u1));
/// otherwise u is the vertex whose parent is the ancestor, and the first of
/// high-sibling, low-sibling, spine_reinsert whose guard holds is chosen.
inline std::pair<SwitchRule, SwitchContext> choose_switch(const RootedTree& tree, VertexId a, VertexId b) {
  auto ctx = SwitchContext::derive(tree, a, b);
  const auto analysis = detail::check_switch(tree, ctx);
  const auto& r = analysis.ranks;
  if (tree.is_ancestor(ctx.w0, ctx.u0)) ctx = SwitchContext::derive(tree, b, a);
  if (!tree.is_ancestor(ctx.u0, ctx.w0)) {
    if (r[ctx.w1] < r[ctx.u1]) ctx = SwitchContext::derive(tree, b, a);
    return {SwitchRule::disjoint, ctx};
  }
  if (r[ctx.w1] >= r[ctx.u]) return {SwitchRule::nested_high_sibling, ctx};
  const auto v1 = tree.parent(ctx.u0);
  if (!v1 || r[*v1] <= 2 + r[ctx.w1]) return {SwitchRule::nested_low_sibling, ctx};
  return {SwitchRule::spine_reinsert, ctx};
}

/// One placement step towards the spine tree for a tree whose partition vector
/// has no repeated entries. Walking down from the root, the spine vertex at
/// depth j should carry the saturated subtree with the (j+1)-th smallest
/// exponent as a child. At the first depth where it does not, that saturated
/// vertex w is hoisted: its sibling takes the place of its parent w0, and w0 is
/// inserted above the spine vertex (becoming the new root at depth 0).
/// Returns nullopt when the tree already has the spine shape.
inline std::optional<Rewrite> rewrite_hoist_min_saturated(const RootedTree& tree) {
  auto sats = saturated_vertices(tree);
  std::sort(sats.begin(), sats.end(), [](const auto& x, const auto& y) { return x.exponent < y.exponent; });
  for (std::size_t i = 1; i < sats.size(); ++i) {
    if (sats[i].exponent == sats[i - 1].exponent) throw GuardError("hoist_min_saturated: repeated exponents, normalize first");
  }
  VertexId spine = tree.root();
  for (std::size_t i = 0; i + 1 < sats.size(); ++i) {
    const VertexId w = sats[i].vertex;
    const VertexId w0 = *tree.parent(w);
    const auto kids = tree.children(w0);
    const VertexId w1 = kids[0] == w ? kids[1] : kids[0];
    if (w0 == spine) {
      spine = w1;
      continue;
    }
    const VertexId wp = *tree.parent(w0);
    std::vector<Edge> removed{{w0, w1}, {wp, w0}};
    std::vector<Edge> added{{wp, w1}, {w0, spine}};
    if (const auto above = tree.parent(spine)) {
      removed.push_back({*above, spine});
      added.push_back({*above, w0});
    }
    return detail::apply_edits(tree, std::move(removed), std::move(added));
  }
  return std::nullopt;
}

inline RootedTree hoist_min_saturated(const RootedTree& tree) {
  auto step = rewrite_hoist_min_saturated(tree);
  return step ? std::move(step->tree) : tree;
}

namespace detail {

inline TraceStep trace_step(const RootedTree& before, const Rewrite& rw, std::string rule) {
  const auto index = canonical_index(before);
  TraceStep s;
  s.rule = std::move(rule);
  for (const Edge& e : rw.removed) s.removed.emplace_back(index[e.parent.value()], index[e.child.value()]);
  for (const Edge& e : rw.added) s.added.emplace_back(index[e.parent.value()], index[e.child.value()]);
  s.security_before = security(before);
  s.security_after = security(rw.tree);
  s.saturated_before = saturated_vertices(before).size();
  s.saturated_after = saturated_vertices(rw.tree).size();
  return s;
}

}  // namespace detail

/// Rewrites a proper binary tree into the spine tree with the same leaf count
/// using only security-nondecreasing steps.
///
/// While the partition vector has repeated entries, the two first (canonical
/// preorder) saturated vertices carrying the largest repeated exponent are
/// switched with the rule picked by choose_switch. After a spine_reinsert the
/// same pair is kept while both remain saturated, so every step either merges
/// saturated subtrees or shortens d(u, w). Once all exponents are distinct,
/// hoist steps arrange the saturated subtrees along the spine.
inline std::pair<RootedTree, RewriteTrace> normalize_to_tl(const RootedTree& tree) {
  detail::require_proper_binary(tree, "normalize_to_tl");
  RewriteTrace trace;
  RootedTree current = tree;
  std::optional<std::pair<VertexId, VertexId>> kept;
  const std::size_t limit = 4 * tree.size() * tree.size() + 16;

  for (std::size_t guard = 0;; ++guard) {
    if (guard > limit) throw std::logic_error("normalize_to_tl: no termination");
    const auto sats = saturated_vertices(current);
    std::optional<unsigned> repeated;
    {
      std::vector<unsigned> exps;
      for (const auto& s : sats) exps.push_back(s.exponent);
      std::sort(exps.begin(), exps.end(), std::greater<>());
      for (std::size_t i = 0; i + 1 < exps.size(); ++i) {
        if (exps[i] == exps[i + 1]) {
          repeated = exps[i];
          break;
        }
      }
    }
    if (!repeated) {
      auto step = rewrite_hoist_min_saturated(current);
      if (!step) break;
      trace.steps.push_back(detail::trace_step(current, *step, "hoist_min_saturated"));
      current = std::move(step->tree);
      kept.reset();
      continue;
    }

    std::vector<VertexId> candidates;
    for (const auto& s : sats) {
      if (s.exponent == *repeated) candidates.push_back(s.vertex);
    }
    std::pair<VertexId, VertexId> pair{candidates[0], candidates[1]};
    if (kept && std::count(candidates.begin(), candidates.end(), kept->first) &&
        std::count(candidates.begin(), candidates.end(), kept->second)) {
      pair = *kept;
    }
    const auto [rule, ctx] = choose_switch(current, pair.first, pair.second);
    auto rw = apply_switch(current, rule, ctx);
    auto s = detail::trace_step(current, rw, rule_name(rule));
    s.distance_before = current.distance(ctx.u, ctx.w);
    s.distance_after = rw.tree.distance(ctx.u, ctx.w);
    trace.steps.push_back(std::move(s));
    kept = rule == SwitchRule::spine_reinsert ? std::optional(std::pair{ctx.u, ctx.w}) : std::nullopt;
    current = std::move(rw.tree);
  }
  return {std::move(current), std::move(trace)};
}

enum class FlipVariant { exchange_subtrees = 1, lift_spine = 2 };

/// Security-preserving rearrangements of the spine tree T_L when the exponents
/// satisfy n_i = n_{i+1} + 1 (2 <= i <= k-1, 1-based). With spine v_1..v_k and
/// complete subtrees c_1 (= v_1), c_2..c_k:
///   variant 1: c_i and c_{i+1} trade places;
///   variant 2: v_{i-1} moves up to v_{i+1} and v_i takes c_{i+1}.
inline Rewrite rewrite_flip_adjacent(const RootedTree& tree, std::size_t i, FlipVariant variant) {
  detail::require_proper_binary(tree, "flip_adjacent");
  const std::uint64_t leaves = tree.leaf_count();
  const auto n = binary_power_representation(leaves).exponents;
  const std::size_t k = n.size();
  if (i < 2 || i + 1 > k) throw GuardError("flip_adjacent: index must satisfy 2 <= i <= k - 1");
  if (n[i - 1] != n[i] + 1) throw GuardError("flip_adjacent: requires n_i = n_{i+1} + 1");
  if (variant != FlipVariant::exchange_subtrees && variant != FlipVariant::lift_spine) {
    throw GuardError("flip_adjacent: variant must be 1 or 2");
  }
  if (!is_isomorphic(tree, build_tl(leaves))) throw GuardError("flip_adjacent: tree is not the spine tree");

  std::vector<std::uint64_t> below(tree.size(), 0);
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto kids = tree.children(*it);
    if (kids.empty()) below[it->value()] = 1;
    for (const VertexId c : kids) below[it->value()] += below[c.value()];
  }
  // 1-based: spine[j] = v_j, comp[j] = c_j
  std::vector<VertexId> spine(k + 1), comp(k + 1);
  spine[k] = tree.root();
  for (std::size_t j = k; j >= 2; --j) {
    const auto kids = tree.children(spine[j]);
    const bool first_is_comp = below[kids[0].value()] == (std::uint64_t{1} << n[j - 1]);
    comp[j] = first_is_comp ? kids[0] : kids[1];
    spine[j - 1] = first_is_comp ? kids[1] : kids[0];
  }
  comp[1] = spine[1];

  if (variant == FlipVariant::exchange_subtrees) {
    return detail::apply_edits(tree, {{spine[i + 1], comp[i + 1]}, {spine[i], comp[i]}},
                               {{spine[i + 1], comp[i]}, {spine[i], comp[i + 1]}});
  }
  return detail::apply_edits(tree, {{spine[i + 1], comp[i + 1]}, {spine[i], spine[i - 1]}},
                             {{spine[i + 1], spine[i - 1]}, {spine[i], comp[i + 1]}});
}

inline RootedTree flip_adjacent(const RootedTree& tree, std::size_t i, FlipVariant variant) {
  return rewrite_flip_adjacent(tree, i, variant).tree;
}

enum class RerootMode { general, degree_preserving };

/// Deepest leaf descendant of v, ties broken by canonical preorder.
inline VertexId deepest_leaf_below(const RootedTree& tree, VertexId v) {
  const auto index = canonical_index(tree);
  VertexId best = v;
  std::size_t best_depth = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{v, 0}};
  while (!stack.empty()) {
    const auto [x, d] = stack.back();
    stack.pop_back();
    if (tree.is_leaf(x)) {
      if (d > best_depth || (d == best_depth && index[x.value()] < index[best.value()]) || best == v) {
        best = x;
        best_depth = d;
      }
      continue;
    }
    for (const VertexId c : tree.children(x)) stack.emplace_back(c, d + 1);
  }
  return best;
}

/// Makes v the root without lowering its rank. With w a leaf below v:
///   general:           T - (parent(v), v) + (w, old root)
///   degree_preserving: cut T(v) off (v stays behind as a leaf of the rest),
///                      then identify the old root with w; the outdegree
///                      multiset is unchanged.
inline RootedTree reroot_at_vertex(const RootedTree& tree, VertexId v, RerootMode mode) {
  if (!tree.contains(v)) throw DomainError("reroot_at_vertex: vertex out of range");
  if (v == tree.root()) return tree;
  if (tree.is_leaf(v)) throw DomainError("reroot_at_vertex: vertex has no leaf descendant below it");
  const VertexId root = tree.root();
  const VertexId u = *tree.parent(v);
  const VertexId w = deepest_leaf_below(tree, v);
  auto links = tree.parent_links();
  if (mode == RerootMode::general) {
    links[v.value()].reset();
    links[root.value()] = w;
    return RootedTree::from_parents(links);
  }
  // The old root's id now stands for the left-behind copy of v, and w's id for
  // the merged (old root, w) vertex.
  for (const VertexId c : tree.children(root)) links[c.value()] = w;
  links[v.value()].reset();
  links[root.value()] = (u == root) ? w : u;
  return RootedTree::from_parents(links);
}

}  // namespace protree
