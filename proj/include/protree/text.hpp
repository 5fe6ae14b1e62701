#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "protree/canonical.hpp"
#include "protree/error.hpp"
#include "protree/tree.hpp"

namespace protree {

// Parenthesis grammar:  Tree := "L" | "(" Tree+ ")"

inline RootedTree parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 0);
  std::vector<std::optional<VertexId>> links;
  std::vector<std::uint32_t> open;       // stack of internal vertices awaiting ')'
  std::vector<std::size_t> open_offset;  // where each was opened
  std::vector<std::uint32_t> arity;      // children seen so far, per open vertex
  bool complete = false;                 // a whole tree has been read

  auto add_vertex = [&](std::size_t at) {
    if (complete) throw ParseError("unexpected character after end of tree", at);
    std::optional<VertexId> parent;
    if (!open.empty()) {
      parent = VertexId{open.back()};
      ++arity.back();
    }
    links.push_back(parent);
    return static_cast<std::uint32_t>(links.size() - 1);
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'L':
        add_vertex(i);
        if (open.empty()) complete = true;
        break;
      case '(':
        open.push_back(add_vertex(i));
        open_offset.push_back(i);
        arity.push_back(0);
        break;
      case ')':
        if (open.empty()) throw ParseError("unbalanced ')'", i);
        if (arity.back() == 0) throw ParseError("internal vertex without children", i);
        open.pop_back();
        open_offset.pop_back();
        arity.pop_back();
        if (open.empty()) complete = true;
        break;
      default:
        throw ParseError(std::string("stray character '") + text[i] + "'", i);
    }
  }
  if (!open.empty()) throw ParseError("unbalanced '(' opened", open_offset.back());
  return RootedTree::from_parents(links);
}

/// Parenthesis serialization. With `canonical`, children are emitted in
/// canonical order so isomorphic trees give identical strings; otherwise in
/// storage order.
inline std::string serialize(const RootedTree& tree, bool canonical = true) {
  if (canonical) return canonical_string(tree);
  std::string out;
  out.reserve(3 * tree.size());
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto kids = tree.children(top.v);
    if (kids.empty()) {
      out.push_back('L');
      stack.pop_back();
      continue;
    }
    if (top.next == 0) out.push_back('(');
    if (top.next == kids.size()) {
      out.push_back(')');
      stack.pop_back();
      continue;
    }
    const VertexId child = kids[top.next++];
    stack.push_back({child, 0});
  }
  return out;
}

}  // namespace protree
