#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "protree/bits.hpp"
#include "protree/error.hpp"
#include "protree/tree.hpp"

namespace protree {

/// Builders refuse anything above these sizes.
inline constexpr unsigned kMaxCompleteHeight = 25;
inline constexpr std::uint64_t kMaxBuildLeaves = std::uint64_t{1} << kMaxCompleteHeight;
inline constexpr std::uint64_t kMaxBuildOrder = std::uint64_t{1} << (kMaxCompleteHeight + 1);

/// Strictly decreasing exponents (n1 > n2 > ... > nk) of the set bits of l.
struct PowerRep {
  std::vector<unsigned> exponents;

  std::size_t k() const noexcept { return exponents.size(); }
  friend bool operator==(const PowerRep&, const PowerRep&) = default;
};

inline PowerRep binary_power_representation(std::uint64_t leaves) {
  if (leaves == 0) throw DomainError("binary_power_representation: l must be positive");
  PowerRep rep;
  for (int bit = 63; bit >= 0; --bit) {
    if ((leaves >> bit) & 1u) rep.exponents.push_back(static_cast<unsigned>(bit));
  }
  return rep;
}

namespace detail {

inline void check_leaves(std::uint64_t leaves, const char* what) {
  if (leaves == 0) throw DomainError(std::string(what) + ": l must be positive");
  if (leaves > kMaxBuildLeaves) throw SizeError(std::string(what) + ": leaf count above 2^25");
}

/// Grows the (currently childless) vertex `at` into a complete binary tree of height m.
inline void grow_complete(TreeBuilder& b, VertexId at, unsigned m) {
  std::vector<VertexId> level{at};
  for (unsigned d = 0; d < m; ++d) {
    std::vector<VertexId> next;
    next.reserve(level.size() * 2);
    for (const VertexId v : level) {
      next.push_back(b.add_child(v));
      next.push_back(b.add_child(v));
    }
    level = std::move(next);
  }
}

}  // namespace detail

/// c_m: 2^m leaves, all at depth m.
inline RootedTree build_complete_binary(unsigned m) {
  if (m > kMaxCompleteHeight) throw SizeError("build_complete_binary: height above 25");
  TreeBuilder b;
  detail::grow_complete(b, b.add_root(), m);
  return b.build();
}

/// The spine tree T_L. With L = (n1, ..., nk): a path v1 ... vk rooted at vk,
/// v1 is the root of a complete tree with 2^n1 leaves, and every other vi also
/// carries a complete subtree with 2^ni leaves. For k = 1 this is c_n1.
inline RootedTree build_tl(std::uint64_t leaves) {
  detail::check_leaves(leaves, "build_tl");
  const auto rep = binary_power_representation(leaves);
  const auto& n = rep.exponents;
  TreeBuilder b;
  VertexId spine = b.add_root();  // v_k
  for (std::size_t i = n.size() - 1; i >= 1; --i) {
    const VertexId lower = b.add_child(spine);
    detail::grow_complete(b, b.add_child(spine), n[i]);
    spine = lower;
  }
  detail::grow_complete(b, spine, n[0]);
  return b.build();
}

/// Almost complete tree F(l): complete tree on 2^floor(log2 l) leaves with the
/// leftmost l - 2^floor(log2 l) leaves each given two children.
inline RootedTree build_f(std::uint64_t leaves) {
  detail::check_leaves(leaves, "build_f");
  const unsigned m = floor_log2(leaves);
  TreeBuilder b;
  detail::grow_complete(b, b.add_root(), m);
  const auto base = b.leaves_left_to_right();
  const std::uint64_t extra = leaves - (std::uint64_t{1} << m);
  for (std::uint64_t i = 0; i < extra; ++i) {
    b.add_child(base[i]);
    b.add_child(base[i]);
  }
  return b.build();
}

/// F(l) by the stepwise construction from the binary power representation:
/// start from c_n1 rooted at q1; at step i split the left child of q_{i-1} into
/// copies of c_ni, grow the leftmost copy (rooted at rho_i) into c_{ni+1}, and
/// continue from its sibling q_i.
inline RootedTree build_f_stepwise(std::uint64_t leaves) {
  detail::check_leaves(leaves, "build_f_stepwise");
  const auto n = binary_power_representation(leaves).exponents;
  TreeBuilder b;
  VertexId q = b.add_root();
  detail::grow_complete(b, q, n[0]);
  for (std::size_t i = 1; i < n.size(); ++i) {
    const unsigned d = n[i - 1] - n[i];
    VertexId rho = b.children(q).front();  // l_{i-1}
    for (unsigned step = 1; step < d; ++step) rho = b.children(rho).front();
    for (const VertexId leaf : b.leaves_left_to_right(rho)) {
      b.add_child(leaf);
      b.add_child(leaf);
    }
    const auto& siblings = b.children(*b.parent(rho));
    q = siblings[0] == rho ? siblings[1] : siblings[0];
  }
  return b.build();
}

/// Proper binary caterpillar: every internal vertex has a leaf child.
inline RootedTree build_binary_caterpillar(std::uint64_t leaves) {
  if (leaves < 2) throw DomainError("build_binary_caterpillar: need at least 2 leaves");
  detail::check_leaves(leaves, "build_binary_caterpillar");
  TreeBuilder b;
  VertexId spine = b.add_root();
  for (std::uint64_t i = 2; i < leaves; ++i) {
    b.add_child(spine);
    spine = b.add_child(spine);
  }
  b.add_child(spine);
  b.add_child(spine);
  return b.build();
}

/// Path on n vertices rooted at an end.
inline RootedTree build_path(std::uint64_t order) {
  if (order == 0) throw DomainError("build_path: order must be positive");
  if (order > kMaxBuildOrder) throw SizeError("build_path: order too large");
  TreeBuilder b;
  VertexId v = b.add_root();
  for (std::uint64_t i = 1; i < order; ++i) v = b.add_child(v);
  return b.build();
}

/// Starlike tree S(l1, ..., lk): paths of the given lengths joined at one end,
/// rooted at the common end. Its root rank is min(li).
inline RootedTree build_starlike(std::span<const std::uint64_t> arms) {
  if (arms.empty()) throw DomainError("build_starlike: at least one arm required");
  std::uint64_t total = 1;
  for (const auto len : arms) {
    if (len == 0) throw DomainError("build_starlike: arm lengths must be positive");
    total += len;
    if (total > kMaxBuildOrder) throw SizeError("build_starlike: order too large");
  }
  TreeBuilder b;
  const VertexId root = b.add_root();
  for (const auto len : arms) {
    VertexId v = root;
    for (std::uint64_t i = 0; i < len; ++i) v = b.add_child(v);
  }
  return b.build();
}

/// Complete k-ary tree of order n, filled breadth-first and leftmost-first:
/// every vertex gets k children in turn until the order is used up, so the
/// last parent may keep fewer (the residual vertex).
inline RootedTree build_complete_kary(std::uint64_t order, std::uint64_t k) {
  if (k < 2) throw DomainError("build_complete_kary: k must be at least 2");
  if (order == 0) throw DomainError("build_complete_kary: order must be positive");
  if (order > kMaxBuildOrder) throw SizeError("build_complete_kary: order too large");
  TreeBuilder b;
  b.add_root();
  for (std::uint64_t i = 1; i < order; ++i) b.add_child(VertexId{static_cast<std::uint32_t>((i - 1) / k)});
  return b.build();
}

}  // namespace protree
