// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "protree/protree.hpp"
#include "test_support.hpp"

using namespace protree;
using namespace protree::testing;
using Clock = std::chrono::steady_clock;

namespace {

// Time limits (seconds).
constexpr double kRegressionLimit = 0.001;
constexpr double kCensus7Limit = 1.0;
constexpr double kMaxSecurityLimit = 300.0;
constexpr double kMaxSecuritySmallLimit = 1.0;  // l <= 14
constexpr double kConstructionLimit = 10.0;
constexpr double kNormalizeLimit = 120.0;
constexpr double kRootRankLimit = 300.0;

constexpr std::size_t kRandomSwitches = 10000;
constexpr std::size_t kRandomFlips = 1000;
constexpr std::size_t kRandomReroots = 1000;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

Outcome security_regression() {
  const auto t = parse(kNineSecurity);
  const auto t0 = Clock::now();
  const auto sec = security(t);
  const auto n1 = protected_count(t, 1), n2 = protected_count(t, 2);
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << "security " << sec << ", n1 " << n1 << ", n2 " << n2 << ", " << fmt_seconds(dt);
  return {sec == 9 && n1 == 7 && n2 == 2 && dt < kRegressionLimit, d.str()};
}

Outcome census7() {
  const auto t0 = Clock::now();
  const auto c = brute_force_extremes(7);
  const double dt = seconds_since(t0);
  const auto we = wedderburn_etherington(7)[7];
  std::ostringstream d;
  d << c.total_shapes << " shapes (recurrence " << we << "), max " << c.max_security << ", " << c.maximizer_count
    << " maximizers, " << fmt_seconds(dt);
  return {c.total_shapes == 11 && we == 11 && c.max_security == 8 && c.maximizer_count == 4 && dt < kCensus7Limit,
          d.str()};
}

Outcome max_security_vs_oracle() {
  const auto t0 = Clock::now();
  ShapeCatalog catalog;
  bool ok = true;
  double small = 0;
  std::ostringstream d;
  for (std::size_t l = 3; l <= 20; ++l) {
    std::uint64_t best = 0;
    for (const auto& e : catalog.level(l)) best = std::max(best, e.security);
    if (best != max_security(l)) {
      ok = false;
      d << "mismatch at " << l << " (formula " << max_security(l) << ", oracle " << best << "); ";
    }
    if (l == 14) small = seconds_since(t0);
  }
  const double dt = seconds_since(t0);
  d << "l=3..20 exact, l<=14 in " << fmt_seconds(small) << ", total " << fmt_seconds(dt);
  return {ok && small < kMaxSecuritySmallLimit && dt < kMaxSecurityLimit, d.str()};
}

Outcome construction() {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  for (std::uint64_t l = 1; l <= 4096; ++l) {
    const auto rep = binary_power_representation(l);
    const std::uint64_t closed = 2 * l - rep.exponents.front() - rep.k() - 1;
    if (security(build_f(l)) != closed || security(build_tl(l)) != closed) ++bad;
  }
  const double dt = seconds_since(t0);
  return {bad == 0 && dt < kConstructionLimit,
          std::to_string(bad) + " mismatches over l=1..4096, " + fmt_seconds(dt)};
}

Outcome partition_pair() {
  const auto a = security(parse(kPartitionHigh)), b = security(parse(kPartitionLow));
  const bool m = partition_vector(parse(kPartitionHigh)).to_string() == "(2,2,1,0)" &&
                 partition_vector(parse(kPartitionLow)).to_string() == "(2,2,1,0)";
  return {a == 15 && b == 14 && m, "securities " + std::to_string(a) + " and " + std::to_string(b) + ", M=(2,2,1,0)"};
}

std::vector<std::pair<VertexId, VertexId>> equal_pairs(const RootedTree& t) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto sats = saturated_vertices(t);
  for (const auto& a : sats) {
    for (const auto& b : sats) {
      if (a.vertex != b.vertex && a.exponent == b.exponent && a.vertex != t.root() && b.vertex != t.root()) {
        out.emplace_back(a.vertex, b.vertex);
      }
    }
  }
  return out;
}

constexpr SwitchRule kRules[] = {SwitchRule::disjoint, SwitchRule::nested_high_sibling, SwitchRule::nested_low_sibling,
                                 SwitchRule::spine_reinsert};

// Applies every rule whose guard holds; returns (applied, violations).
std::pair<std::size_t, std::size_t> scan_contexts(const RootedTree& t, const std::pair<VertexId, VertexId>& p) {
  std::size_t applied = 0, violations = 0;
  const auto ctx = SwitchContext::derive(t, p.first, p.second);
  const auto before = security(t);
  for (const auto rule : kRules) {
    try {
      const auto out = apply_switch(t, rule, ctx);
      ++applied;
      if (security(out.tree) < before || out.tree.leaf_count() != t.leaf_count() || out.tree.size() != t.size()) {
        ++violations;
      }
    } catch (const GuardError&) {
    }
  }
  return {applied, violations};
}

Outcome monotonicity() {
  std::size_t exhaustive = 0, random_applied = 0, violations = 0;
  for (std::size_t l = 2; l <= 10; ++l) {
    for_each_shape(l, [&](const RootedTree& t) {
      for (const auto& p : equal_pairs(t)) {
        const auto [a, v] = scan_contexts(t, p);
        exhaustive += a;
        violations += v;
      }
    });
  }
  std::mt19937_64 rng(20261016);
  std::size_t instances = 0;
  while (instances < kRandomSwitches) {
    const auto t = random_proper_binary(2 + rng() % 63, rng);
    const auto pairs = equal_pairs(t);
    if (pairs.empty()) continue;
    const auto [a, v] = scan_contexts(t, pairs[rng() % pairs.size()]);
    if (a == 0) continue;
    ++instances;
    random_applied += a;
    violations += v;
  }
  std::size_t flips = 0, flip_diff = 0;
  while (flips < kRandomFlips) {
    const std::uint64_t l = 1 + rng() % 65536;
    const auto n = binary_power_representation(l).exponents;
    std::vector<std::size_t> valid;
    for (std::size_t i = 2; i + 1 <= n.size(); ++i) {
      if (n[i - 1] == n[i] + 1) valid.push_back(i);
    }
    if (valid.empty()) continue;
    const auto t = shuffled(build_tl(l), rng);
    const auto out = flip_adjacent(t, valid[rng() % valid.size()],
                                   rng() % 2 ? FlipVariant::exchange_subtrees : FlipVariant::lift_spine);
    ++flips;
    if (security(out) != security(t)) ++flip_diff;
  }
  std::ostringstream d;
  d << exhaustive << " exhaustive + " << random_applied << " random rewrites (" << instances << " instances), "
    << violations << " violations; " << flips << " flips, " << flip_diff << " unequal";
  return {violations == 0 && flip_diff == 0 && exhaustive > 0, d.str()};
}

Outcome normalization() {
  const auto t0 = Clock::now();
  std::size_t shapes = 0, bad = 0;
  for (std::size_t l = 1; l <= 12; ++l) {
    const auto target = build_tl(l);
    for_each_shape(l, [&](const RootedTree& t) {
      ++shapes;
      const auto [out, trace] = normalize_to_tl(t);
      bool ok = is_isomorphic(out, target);
      std::uint64_t prev = security(t);
      for (const auto& s : trace.steps) {
        if (s.security_before != prev || s.security_after < s.security_before) ok = false;
        prev = s.security_after;
      }
      if (prev != max_security(l)) ok = false;
      bad += !ok;
    });
  }
  const double dt = seconds_since(t0);
  return {bad == 0 && dt < kNormalizeLimit,
          std::to_string(shapes) + " shapes, " + std::to_string(bad) + " failures, " + fmt_seconds(dt)};
}

Outcome root_ranks() {
  const auto t0 = Clock::now();
  std::size_t checks = 0, bad = 0;
  std::ostringstream d;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++bad;
      d << what << "; ";
    }
  };
  for (std::size_t n = 1; n <= 11; ++n) {
    const auto r = brute_force_max_root_rank(n);
    expect(r.max_root_rank == n - 1, "general n=" + std::to_string(n));
    expect(r.max_vertex_rank == r.max_root_rank, "general vertex n=" + std::to_string(n));
    for (std::size_t k = 1; k <= 4 && k < n; ++k) {
      const auto s = brute_force_max_root_rank(n, std::nullopt, k);
      expect(s.max_root_rank == (n - 1) / k, "root degree n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    for (const auto& [seq, rec] : root_rank_by_outdegree_sequence(n)) {
      expect(rec.max_vertex_rank == rec.max_root_rank, "outdegree class n=" + std::to_string(n));
    }
  }
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::size_t limit = k == 2 ? 14 : 12;
    for (std::size_t n = 1; n <= limit; ++n) {
      RootedCatalog bounded(k);
      std::uint32_t root = 0, vertex = 0;
      for (const auto& e : bounded.level(n)) {
        root = std::max(root, e.root_rank);
        vertex = std::max(vertex, e.max_rank);
      }
      expect(root == vertex, "bounded vertex n=" + std::to_string(n) + " k=" + std::to_string(k));
      if ((n - 1) % k != 0) continue;
      const auto r = brute_force_max_root_rank(n, k);
      const auto formula = floor_log(n * (k - 1) + 1, k) - 1;
      expect(r.max_root_rank == formula, "k-ary n=" + std::to_string(n) + " k=" + std::to_string(k));
      expect(r.max_vertex_rank == r.max_root_rank, "k-ary vertex n=" + std::to_string(n));
    }
  }
  const double dt = seconds_since(t0);
  d << checks << " class checks (general, root degree, proper k-ary, outdegree <= k, outdegree sequence), " << bad
    << " failures, " << fmt_seconds(dt);
  return {bad == 0 && dt < kRootRankLimit, d.str()};
}

Outcome outdegrees() {
  std::mt19937_64 rng(7);
  std::size_t done = 0, bad = 0;
  while (done < kRandomReroots) {
    const std::size_t k = 2 + rng() % 3;
    const auto t = random_tree(2 + rng() % 49, k, rng);
    const VertexId v{static_cast<std::uint32_t>(rng() % t.size())};
    if (t.is_leaf(v) || v == t.root()) continue;
    const auto out = reroot_at_vertex(t, v, RerootMode::degree_preserving);
    ++done;
    if (outdegree_sequence(out) != outdegree_sequence(t) || out.root() != v) ++bad;
  }
  return {bad == 0, std::to_string(done) + " random k-ary trees, " + std::to_string(bad) + " changed"};
}

Outcome census_artifact() {
  std::ostringstream out, err;
  const int code = cli::run({"table", "--max-leaves", "16"}, out, err);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  bool ok = code == 0 && line == "leaves\tshapes\tmax_security\tmaximizers\tfraction";
  const std::regex row(R"((\d+)\t(\d+)\t(\d+)\t(\d+)\t(\d+)/(\d+))");
  std::size_t rows = 0;
  std::string row7;
  while (std::getline(lines, line)) {
    std::smatch m;
    if (!std::regex_match(line, m, row)) {
      ok = false;
      continue;
    }
    ++rows;
    const auto count = std::stoull(m[4]), num = std::stoull(m[5]), den = std::stoull(m[6]);
    if (count < 1 || num < 1 || num > den) ok = false;
    if (m[1] == "7") row7 = std::string(m[5]) + "/" + std::string(m[6]);
  }
  ok = ok && rows == 16 && row7 == "4/11";
  return {ok, std::to_string(rows) + " rows, l=7 fraction " + row7};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"security regression", security_regression},
      {"seven-leaf census", census7},
      {"max security formula vs oracle", max_security_vs_oracle},
      {"construction equivalence", construction},
      {"equal-partition pair", partition_pair},
      {"switch monotonicity", monotonicity},
      {"normalization", normalization},
      {"root-rank bounds", root_ranks},
      {"outdegree preservation", outdegrees},
      {"census artifact", census_artifact},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
