#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "protree/canonical.hpp"
#include "protree/error.hpp"
#include "protree/oracle.hpp"
#include "protree/trace.hpp"
#include "protree/tree.hpp"

namespace protree {

// Tree schema: {"children": [ ... ]}, a leaf is {"children": []}.

inline nlohmann::json tree_to_json(const RootedTree& tree) {
  const auto order = canonical_order(tree);  // parents before children
  const auto index = canonical_index(tree);
  std::vector<nlohmann::json> node(tree.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto kids = nlohmann::json::array();
    std::vector<VertexId> sorted(tree.children(*it).begin(), tree.children(*it).end());
    std::sort(sorted.begin(), sorted.end(), [&](VertexId a, VertexId b) { return index[a.value()] < index[b.value()]; });
    for (const VertexId c : sorted) kids.push_back(std::move(node[c.value()]));
    node[it->value()] = nlohmann::json{{"children", std::move(kids)}};
  }
  return std::move(node[tree.root().value()]);
}

inline RootedTree tree_from_json(const nlohmann::json& doc) {
  std::vector<std::optional<VertexId>> links;
  std::vector<std::pair<const nlohmann::json*, std::optional<VertexId>>> stack{{&doc, std::nullopt}};
  while (!stack.empty()) {
    const auto [node, parent] = stack.back();
    stack.pop_back();
    if (!node->is_object()) throw ParseError("json tree: vertex must be an object", 0);
    const auto it = node->find("children");
    if (it == node->end() || !it->is_array()) throw ParseError("json tree: vertex needs a \"children\" array", 0);
    if (node->size() != 1) throw ParseError("json tree: unexpected key in vertex", 0);
    const VertexId self{static_cast<std::uint32_t>(links.size())};
    links.push_back(parent);
    for (auto c = it->rbegin(); c != it->rend(); ++c) stack.emplace_back(&*c, self);
  }
  return RootedTree::from_parents(links);
}

inline RootedTree parse_json_tree(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  return tree_from_json(doc);
}

inline nlohmann::json trace_to_json(const RewriteTrace& trace) {
  auto steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    auto edges = [](const auto& list) {
      auto out = nlohmann::json::array();
      for (const auto& [p, c] : list) out.push_back({p, c});
      return out;
    };
    steps.push_back({{"rule", s.rule},
                     {"removed", edges(s.removed)},
                     {"added", edges(s.added)},
                     {"security_before", s.security_before},
                     {"security_after", s.security_after}});
  }
  return nlohmann::json{{"steps", std::move(steps)}};
}

inline std::string census_tsv(const std::vector<ShapeCensus>& rows) {
  std::ostringstream out;
  out << "leaves\tshapes\tmax_security\tmaximizers\tfraction\n";
  for (const auto& r : rows) {
    out << r.leaves << '\t' << r.total_shapes << '\t' << r.max_security << '\t' << r.maximizer_count << '\t'
        << r.maximizer_fraction.to_string() << '\n';
  }
  return out.str();
}

inline nlohmann::json census_json(const std::vector<ShapeCensus>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"leaves", r.leaves},
                   {"shapes", r.total_shapes},
                   {"max_security", r.max_security},
                   {"maximizers", r.maximizer_count},
                   {"fraction", r.maximizer_fraction.to_string()}});
  }
  return out;
}

}  // namespace protree
