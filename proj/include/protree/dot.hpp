#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "protree/canonical.hpp"
#include "protree/rank.hpp"
#include "protree/tree.hpp"

namespace protree {

enum class DotAnnotation { none, ranks };

/// Graphviz digraph, vertices named by canonical preorder index.
inline std::string export_dot(const RootedTree& tree, DotAnnotation annotate = DotAnnotation::none) {
  const auto order = canonical_order(tree);
  const auto index = canonical_index(tree);
  std::vector<std::uint32_t> ranks;
  if (annotate == DotAnnotation::ranks) ranks = all_ranks(tree).values();
  std::ostringstream out;
  out << "digraph T {\n  node [shape=circle];\n";
  for (const VertexId v : order) {
    out << "  " << index[v.value()];
    if (annotate == DotAnnotation::ranks) out << " [label=\"" << ranks[v.value()] << "\"]";
    else out << " [label=\"\"]";
    out << ";\n";
  }
  for (const VertexId v : order) {
    std::vector<std::size_t> kids;
    for (const VertexId c : tree.children(v)) kids.push_back(index[c.value()]);
    std::sort(kids.begin(), kids.end());
    for (const auto c : kids) out << "  " << index[v.value()] << " -> " << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace protree
