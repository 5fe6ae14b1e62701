#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "protree/protree.hpp"

namespace protree::cli {

namespace detail {

inline std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct TreeSource {
  std::string inline_text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* t = cmd->add_option("--tree", inline_text, "tree in parenthesis or JSON form; '-' reads stdin");
    auto* f = cmd->add_option("--file", file, "file holding a tree; '-' reads stdin");
    t->excludes(f);
  }

  RootedTree load(std::istream& in) const {
    std::string text;
    if (!file.empty()) {
      if (file == "-") {
        text = read_all(in);
      } else {
        std::ifstream stream(file);
        if (!stream) throw GuardError("cannot open " + file);
        text = read_all(stream);
      }
    } else if (inline_text == "-") {
      text = read_all(in);
    } else if (!inline_text.empty()) {
      text = inline_text;
    } else {
      throw GuardError("a tree is required (--tree or --file)");
    }
    text = trim(std::move(text));
    if (!text.empty() && text.front() == '{') return parse_json_tree(text);
    return parse(text);
  }
};

inline std::vector<std::uint64_t> split_arms(const std::string& list) {
  std::vector<std::uint64_t> arms;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value == 0) throw GuardError("--arms expects positive integers a,b,c");
    arms.push_back(value);
  }
  if (arms.empty()) throw GuardError("--arms expects positive integers a,b,c");
  return arms;
}

}  // namespace detail

/// Runs one CLI invocation. Exit status: 0 success, 1 usage/parse/guard
/// error, 2 size-guard refusal.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"protection numbers and security of rooted trees", "protree"};
  app.require_subcommand(1, 1);

  // build
  auto* build = app.add_subcommand("build", "construct a named tree family");
  std::string family;
  std::uint64_t leaves = 0, order = 0, k = 0;
  unsigned height = 0;
  std::string arms;
  build->add_option("--family", family, "tl|f|complete|caterpillar|starlike|complete-kary|path")
      ->required()
      ->check(CLI::IsMember({"tl", "f", "complete", "caterpillar", "starlike", "complete-kary", "path"}));
  build->add_option("--leaves", leaves);
  build->add_option("--height", height);
  build->add_option("--order", order);
  build->add_option("--k", k);
  build->add_option("--arms", arms);

  // per-tree queries
  detail::TreeSource src;
  auto* rank = app.add_subcommand("rank", "ranks in canonical preorder, or one vertex's rank");
  std::optional<std::size_t> vertex;
  src.attach(rank);
  rank->add_option("--vertex", vertex, "canonical preorder index");

  auto* sec = app.add_subcommand("security", "sum of all ranks");
  src.attach(sec);

  auto* prot = app.add_subcommand("protected", "number of vertices with rank >= level");
  std::uint32_t level = 0;
  src.attach(prot);
  prot->add_option("--level", level)->required();

  auto* part = app.add_subcommand("partition", "partition vector of a proper binary tree");
  src.attach(part);

  auto* norm = app.add_subcommand("normalize", "rewrite a proper binary tree into T_L");
  bool with_trace = false;
  std::string trace_format = "text";
  src.attach(norm);
  norm->add_flag("--trace", with_trace);
  norm->add_option("--trace-format", trace_format)->check(CLI::IsMember({"text", "json"}));

  auto* flip = app.add_subcommand("flip", "security-preserving flip of T_L");
  std::size_t flip_index = 0;
  int variant = 1;
  src.attach(flip);
  flip->add_option("--index", flip_index)->required();
  flip->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));

  auto* enumerate = app.add_subcommand("enumerate", "all proper binary shapes on a leaf count");
  bool count_only = false;
  enumerate->add_option("--leaves", leaves)->required();
  enumerate->add_flag("--count-only", count_only);

  auto* verify = app.add_subcommand("verify", "check closed forms against exhaustive enumeration");
  std::size_t max_leaves = 12;
  std::vector<std::uint64_t> kary_args, starlike_args;
  verify->add_option("--max-leaves", max_leaves);
  verify->add_option("--kary", kary_args, "n k")->expected(2);
  verify->add_option("--starlike", starlike_args, "n k")->expected(2);

  auto* table = app.add_subcommand("table", "maximizer census per leaf count");
  std::string table_format = "tsv";
  table->add_option("--max-leaves", max_leaves)->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"tsv", "json"}));

  auto* exp = app.add_subcommand("export", "DOT or JSON rendering of a tree");
  std::string format;
  bool with_ranks = false;
  src.attach(exp);
  exp->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--ranks", with_ranks);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*build) {
      RootedTree t;
      if (family == "tl") t = build_tl(leaves);
      else if (family == "f") t = build_f(leaves);
      else if (family == "complete") t = build_complete_binary(height);
      else if (family == "caterpillar") t = build_binary_caterpillar(leaves);
      else if (family == "path") t = build_path(order);
      else if (family == "starlike") {
        const auto a = detail::split_arms(arms);
        t = build_starlike(a);
      } else {
        t = build_complete_kary(order, k);
      }
      out << serialize(t) << '\n';
    } else if (*rank) {
      const auto t = src.load(in);
      const auto ranks = all_ranks(t);
      const auto order_ids = canonical_order(t);
      if (vertex) {
        if (*vertex >= t.size()) throw DomainError("vertex index out of range");
        out << ranks[order_ids[*vertex]] << '\n';
      } else {
        for (std::size_t i = 0; i < order_ids.size(); ++i) out << (i ? " " : "") << ranks[order_ids[i]];
        out << '\n';
      }
    } else if (*sec) {
      out << security(src.load(in)) << '\n';
    } else if (*prot) {
      out << protected_count(src.load(in), level) << '\n';
    } else if (*part) {
      out << partition_vector(src.load(in)).to_string() << '\n';
    } else if (*norm) {
      const auto [result, trace] = normalize_to_tl(src.load(in));
      out << serialize(result) << '\n';
      if (with_trace) {
        if (trace_format == "json") out << trace_to_json(trace).dump() << '\n';
        else out << trace.to_text();
      }
    } else if (*flip) {
      const auto t = src.load(in);
      out << serialize(flip_adjacent(t, flip_index, static_cast<FlipVariant>(variant))) << '\n';
    } else if (*enumerate) {
      if (count_only) {
        out << count_shapes(leaves) << '\n';
      } else {
        for_each_shape(leaves, [&](const RootedTree& t) { out << serialize(t) << '\n'; });
      }
    } else if (*verify) {
      if (max_leaves < 3) throw GuardError("--max-leaves must be at least 3");
      ShapeCatalog catalog;
      for (std::size_t l = 3; l <= max_leaves; ++l) {
        std::uint64_t best = 0;
        for (const auto& e : catalog.level(l)) best = std::max(best, e.security);
        if (best != max_security(l)) {
          out << "MISMATCH: leaves " << l << " formula " << max_security(l) << " oracle " << best << '\n';
          return 1;
        }
      }
      out << "OK: formula = oracle for ℓ=3.." << max_leaves << '\n';
      if (!kary_args.empty()) {
        const auto n = kary_args[0], kk = kary_args[1];
        const auto formula = max_root_rank_kary(n, kk).value;
        const auto oracle = brute_force_max_root_rank(n, kk).max_root_rank;
        out << (formula == oracle ? "OK" : "MISMATCH") << ": k-ary n=" << n << " k=" << kk << " formula " << formula
            << " oracle " << oracle << '\n';
        if (formula != oracle) return 1;
      }
      if (!starlike_args.empty()) {
        const auto n = starlike_args[0], kk = starlike_args[1];
        const auto formula = max_root_rank_starlike(n, kk).value;
        const auto oracle = brute_force_max_root_rank(n, std::nullopt, kk).max_root_rank;
        out << (formula == oracle ? "OK" : "MISMATCH") << ": root degree n=" << n << " k=" << kk << " formula "
            << formula << " oracle " << oracle << '\n';
        if (formula != oracle) return 1;
      }
    } else if (*table) {
      const auto rows = census_table(max_leaves);
      if (table_format == "json") out << census_json(rows).dump() << '\n';
      else out << census_tsv(rows);
    } else if (*exp) {
      const auto t = src.load(in);
      if (format == "dot") out << export_dot(t, with_ranks ? DotAnnotation::ranks : DotAnnotation::none);
      else out << tree_to_json(t).dump() << '\n';
    }
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace protree::cli
