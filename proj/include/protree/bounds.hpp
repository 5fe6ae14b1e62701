#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "protree/bits.hpp"
#include "protree/construct.hpp"
#include "protree/error.hpp"

namespace protree {

/// Closed-form leaf counts are accepted up to this size.
inline constexpr std::uint64_t kMaxFormulaLeaves = std::uint64_t{1} << 30;

namespace detail {
inline void check_formula_leaves(std::uint64_t leaves, const char* what) {
  if (leaves == 0) throw DomainError(std::string(what) + ": l must be positive");
  if (leaves > kMaxFormulaLeaves) throw SizeError(std::string(what) + ": l above 2^30");
}
}  // namespace detail

enum class WitnessFamily { path, starlike, complete_kary };

inline std::string to_string(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::path: return "path";
    case WitnessFamily::starlike: return "starlike";
    case WitnessFamily::complete_kary: return "complete-kary";
  }
  return "?";
}

/// An extremal value together with the construction that attains it.
struct BoundReport {
  std::uint64_t value = 0;
  WitnessFamily witness_family = WitnessFamily::path;
  std::vector<std::uint64_t> witness_params;  // path: {n}; starlike: arm lengths; complete-kary: {n, k}

  std::string witness_name() const {
    std::string s = to_string(witness_family) + "(";
    for (std::size_t i = 0; i < witness_params.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(witness_params[i]);
    }
    return s + ")";
  }
};

inline RootedTree build_witness(const BoundReport& report) {
  const auto& p = report.witness_params;
  switch (report.witness_family) {
    case WitnessFamily::path: return build_path(p.at(0));
    case WitnessFamily::starlike: return build_starlike(p);
    case WitnessFamily::complete_kary: return build_complete_kary(p.at(0), p.at(1));
  }
  throw DomainError("unknown witness family");
}

/// Maximum security over proper binary trees with l leaves:
/// 2(l - floor(log2 l) - 1) + z(l), z(l) = number of zero binary digits of l.
inline std::uint64_t max_security(std::uint64_t leaves) {
  detail::check_formula_leaves(leaves, "max_security");
  return 2 * (leaves - floor_log2(leaves) - 1) + zero_bits(leaves);
}

/// Security of the spine tree: 2l - n1 - k - 1 with L = (n1, ..., nk).
inline std::uint64_t tl_security_closed(std::uint64_t leaves) {
  detail::check_formula_leaves(leaves, "tl_security_closed");
  const auto rep = binary_power_representation(leaves);
  return 2 * leaves - rep.exponents.front() - rep.k() - 1;
}

/// R(c_m) = 2^(m+1) - m - 2.
inline std::uint64_t complete_binary_security(unsigned m) {
  if (m > 62) throw SizeError("complete_binary_security: height too large");
  return (std::uint64_t{1} << (m + 1)) - m - 2;
}

/// Over all rooted trees of order n the root rank is at most n - 1 (a path rooted at an end).
inline BoundReport max_root_rank_general(std::uint64_t order) {
  if (order == 0) throw DomainError("max_root_rank_general: order must be positive");
  return {order - 1, WitnessFamily::path, {order}};
}

/// Root of outdegree k in a tree of order n: root rank at most floor((n-1)/k),
/// attained by a starlike tree with balanced arms.
inline BoundReport max_root_rank_starlike(std::uint64_t order, std::uint64_t k) {
  if (k == 0) throw DomainError("max_root_rank_starlike: k must be positive");
  if (order <= k) throw DomainError("max_root_rank_starlike: need n >= k + 1");
  const std::uint64_t q = (order - 1) / k, r = (order - 1) % k;
  std::vector<std::uint64_t> arms(k, q);
  for (std::uint64_t i = 0; i < r; ++i) ++arms[i];
  return {q, WitnessFamily::starlike, std::move(arms)};
}

/// floor(log_k(n(k-1) + 1)) - 1, evaluated with integers only.
inline std::uint64_t kary_root_rank_formula(std::uint64_t order, std::uint64_t k) {
  if (k < 2) throw DomainError("kary_root_rank_formula: k must be at least 2");
  if (order == 0) throw DomainError("kary_root_rank_formula: order must be positive");
  return floor_log(order * (k - 1) + 1, k) - 1;
}

/// Proper k-ary trees (outdegrees 0 or k) of order n: root rank at most
/// floor(log_k(n(k-1)+1)) - 1, attained by the complete k-ary tree. Such trees
/// exist only for n = 1 (mod k).
inline BoundReport max_root_rank_kary(std::uint64_t order, std::uint64_t k) {
  if (k < 2) throw DomainError("max_root_rank_kary: k must be at least 2");
  if (order == 0) throw DomainError("max_root_rank_kary: order must be positive");
  if ((order - 1) % k != 0) throw DomainError("max_root_rank_kary: no proper k-ary tree has this order");
  return {kary_root_rank_formula(order, k), WitnessFamily::complete_kary, {order, k}};
}

}  // namespace protree
