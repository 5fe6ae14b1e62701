#pragma once

// Independent oracles and generators used only by tests. Nothing here calls
// into the library's rank, canonical or enumeration code.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "protree/tree.hpp"

namespace protree::testing {

inline const char* const kNineSecurity = "((L(LL))(L((LL)(LL))))";
// root(A(B(c2, c1), c2), L) and root(A(B(c2, c1), L), c2)
inline const char* const kPartitionHigh = "(((((LL)(LL))(LL))((LL)(LL)))L)";
inline const char* const kPartitionLow = "(((((LL)(LL))(LL))L)((LL)(LL)))";

/// Rank as the BFS distance from v to the nearest leaf below it.
inline std::vector<std::uint32_t> bfs_ranks(const RootedTree& t) {
  std::vector<std::uint32_t> out(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    std::deque<std::pair<VertexId, std::uint32_t>> q{{VertexId{static_cast<std::uint32_t>(v)}, 0}};
    while (!q.empty()) {
      const auto [x, d] = q.front();
      q.pop_front();
      if (t.is_leaf(x)) {
        out[v] = d;
        break;
      }
      for (const VertexId c : t.children(x)) q.emplace_back(c, d + 1);
    }
  }
  return out;
}

inline std::uint64_t bfs_security(const RootedTree& t) {
  std::uint64_t s = 0;
  for (const auto r : bfs_ranks(t)) s += r;
  return s;
}

/// Wedderburn-Etherington numbers: a(1) = 1,
/// a(2m+1) = sum_{i=1..m} a(i) a(2m+1-i),
/// a(2m)   = sum_{i=1..m-1} a(i) a(2m-i) + a(m)(a(m)+1)/2.
inline std::vector<std::uint64_t> wedderburn_etherington(std::size_t n_max) {
  std::vector<std::uint64_t> a(n_max + 1, 0);
  if (n_max >= 1) a[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::uint64_t s = 0;
    for (std::size_t i = 1; 2 * i < n; ++i) s += a[i] * a[n - i];
    if (n % 2 == 0) s += a[n / 2] * (a[n / 2] + 1) / 2;
    a[n] = s;
  }
  return a;
}

/// Unlabeled rooted trees by order: a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1).
inline std::vector<std::uint64_t> rooted_tree_counts(std::size_t n_max) {
  std::vector<std::uint64_t> a(n_max + 1, 0);
  if (n_max >= 1) a[1] = 1;
  for (std::size_t n = 1; n + 1 <= n_max; ++n) {
    std::uint64_t s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t inner = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        if (k % d == 0) inner += d * a[d];
      }
      s += inner * a[n - k + 1];
    }
    a[n + 1] = s / n;
  }
  return a;
}

/// Random proper binary tree grown by splitting uniformly chosen leaves.
inline RootedTree random_proper_binary(std::size_t leaves, std::mt19937_64& rng) {
  std::vector<std::optional<VertexId>> links{std::nullopt};
  std::vector<std::uint32_t> leaf_ids{0};
  while (leaf_ids.size() < leaves) {
    std::uniform_int_distribution<std::size_t> pick(0, leaf_ids.size() - 1);
    const std::size_t slot = pick(rng);
    const VertexId p{leaf_ids[slot]};
    const auto a = static_cast<std::uint32_t>(links.size());
    links.push_back(p);
    links.push_back(p);
    leaf_ids[slot] = a;
    leaf_ids.push_back(a + 1);
  }
  return RootedTree::from_parents(links);
}

/// Random rooted tree of the given order with outdegrees at most k (0 = unbounded).
inline RootedTree random_tree(std::size_t order, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::optional<VertexId>> links{std::nullopt};
  std::vector<std::size_t> degree{0};
  for (std::size_t v = 1; v < order; ++v) {
    std::vector<std::uint32_t> open;
    for (std::size_t u = 0; u < v; ++u) {
      if (k == 0 || degree[u] < k) open.push_back(static_cast<std::uint32_t>(u));
    }
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const auto p = open[pick(rng)];
    links.push_back(VertexId{p});
    ++degree[p];
    degree.push_back(0);
  }
  return RootedTree::from_parents(links);
}

/// Same tree with vertex ids permuted at random (so storage child order changes).
inline RootedTree shuffled(const RootedTree& t, std::mt19937_64& rng) {
  std::vector<std::uint32_t> perm(t.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::optional<VertexId>> links(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (const auto p = t.parent(VertexId{static_cast<std::uint32_t>(v)})) links[perm[v]] = VertexId{perm[p->value()]};
  }
  return RootedTree::from_parents(links);
}

/// Minimal checker for the DOT subset: digraph ID { stmt* } where a statement
/// is a node (ID [attr=val,...]) or an edge (ID -> ID [attrs]) ended by ';'.
/// Returns the edge list, or nullopt when the text does not conform.
inline std::optional<std::vector<std::pair<std::string, std::string>>> check_dot(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto ident = [&]() -> std::optional<std::string> {
    skip();
    if (i < text.size() && text[i] == '"') {
      const std::size_t end = text.find('"', i + 1);
      if (end == std::string::npos) return std::nullopt;
      std::string s = text.substr(i, end - i + 1);
      i = end + 1;
      return s;
    }
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (i == start) return std::nullopt;
    return text.substr(start, i - start);
  };
  auto expect = [&](const std::string& tok) {
    skip();
    if (text.compare(i, tok.size(), tok) != 0) return false;
    i += tok.size();
    return true;
  };
  auto attrs = [&] {
    skip();
    if (i >= text.size() || text[i] != '[') return true;
    ++i;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ']') {
        ++i;
        return true;
      }
      if (!ident() || !expect("=") || !ident()) return false;
      skip();
      if (i < text.size() && (text[i] == ',' || text[i] == ';')) ++i;
    }
  };
  std::vector<std::pair<std::string, std::string>> edges;
  if (!expect("digraph")) return std::nullopt;
  if (!ident() || !expect("{")) return std::nullopt;
  while (true) {
    skip();
    if (i < text.size() && text[i] == '}') {
      ++i;
      break;
    }
    const auto a = ident();
    if (!a) return std::nullopt;
    skip();
    if (text.compare(i, 2, "->") == 0) {
      i += 2;
      const auto b = ident();
      if (!b) return std::nullopt;
      edges.emplace_back(*a, *b);
    }
    if (!attrs() || !expect(";")) return std::nullopt;
  }
  skip();
  if (i != text.size()) return std::nullopt;
  return edges;
}

}  // namespace protree::testing
