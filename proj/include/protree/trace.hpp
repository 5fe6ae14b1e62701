#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace protree {

/// One applied rewrite. Edge endpoints are canonical preorder indices of the
/// tree the rewrite was applied to.
struct TraceStep {
  std::string rule;
  std::vector<std::pair<std::size_t, std::size_t>> removed;  // (parent, child)
  std::vector<std::pair<std::size_t, std::size_t>> added;
  std::uint64_t security_before = 0;
  std::uint64_t security_after = 0;
  // progress measure: saturated-vertex count and d(u, w) for switch steps
  std::size_t saturated_before = 0;
  std::size_t saturated_after = 0;
  std::size_t distance_before = 0;
  std::size_t distance_after = 0;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }

  /// One line per step:
  ///   1 switch_nested_high_sibling -0>1 -2>4 +0>4 +2>1 security 3 -> 4
  std::string to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      out << (i + 1) << ' ' << s.rule;
      for (const auto& [p, c] : s.removed) out << " -" << p << '>' << c;
      for (const auto& [p, c] : s.added) out << " +" << p << '>' << c;
      out << " security " << s.security_before << " -> " << s.security_after << '\n';
    }
    return out.str();
  }
};

}  // namespace protree
