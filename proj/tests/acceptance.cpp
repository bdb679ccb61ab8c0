// Copyright 2026 The nearly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass --extended to add the order-8 connected census.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nearly/nearly.hpp"
#include "oracles.hpp"

namespace {

using namespace nearly;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::size_t ceiling_half(int n) { return static_cast<std::size_t>(n + 1) / 2; }

std::vector<Graph> classes_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto g = enumerate_graphs(n, false);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

Check formula_suite() {
  Check c;
  std::vector<std::string> misses;
  auto expect_value = [&](const std::string& name, const Graph& g, std::size_t want) {
    const auto got = alpha_prime_1(g);
    if (got.value != want) {
      misses.push_back(name + " expected " + std::to_string(want) + " got " +
                       std::to_string(got.value) + (got.feasible ? "" : " (infeasible)"));
    }
  };
  for (int n = 2; n <= 12; ++n) {
    expect_value("P" + std::to_string(n), path_graph(n), ceiling_half(n));
  }
  for (int n = 3; n <= 12; ++n) {
    expect_value("C" + std::to_string(n), cycle_graph(n), ceiling_half(n));
    expect_value("K1," + std::to_string(n - 1), star_graph(n), 2);
  }
  std::string joined;
  for (const auto& m : misses) joined += (joined.empty() ? "" : "; ") + m;
  if (!misses.empty()) c.fail(joined);
  return c;
}

Check faithful_families() {
  Check c;
  for (int n = 3; n <= 9; ++n) {
    c.expect(alpha_prime_1(complete_graph(n)).value == ceiling_half(n),
             "alpha'_1(K" + std::to_string(n) + ")");
    for (const Graph& g : {path_graph(n), cycle_graph(n), complete_graph(n)}) {
      c.expect(is_faithful(g).faithful, "not faithful: " + emit_graph6(g));
    }
  }
  return c;
}

Check census(int max_n, bool connected_only_theorems) {
  Check c;
  std::vector<TheoremId> ids = {TheoremId::kLowerConnected, TheoremId::kCycleLemma};
  if (!connected_only_theorems) {
    ids.insert(ids.begin(), {TheoremId::kLowerGeneral, TheoremId::kUpperGeneral});
  }
  for (TheoremId id : ids) {
    const auto report = verify_theorem(id, max_n);
    c.expect(report.pass && report.counterexamples.empty(),
             std::string(theorem_name(id)) + " has " +
                 std::to_string(report.counterexamples.size()) + " counterexamples");
  }
  if (!connected_only_theorems) {
    // The census counts every class once.
    const auto report = verify_theorem(TheoremId::kLowerGeneral, max_n);
    std::size_t expected = 0;
    for (int n = 1; n <= max_n; ++n) expected += enumerate_codes(n, false).size();
    c.expect(report.graphs_scanned == expected, "population size");
  }
  return c;
}

Check order_four_extremal() {
  Check c;
  const auto connected = enumerate_graphs(4, true);
  c.expect(connected.size() == 6, "expected 6 connected graphs of order 4");
  std::set<std::string> attained;
  for (const Graph& g : connected) {
    const auto value = alpha_prime_1(g).value;
    c.expect(value == 2, canonical_code(g) + " has alpha'_1 " + std::to_string(value));
    if (value == 2) attained.insert(canonical_code(g));
  }
  std::set<std::string> family;
  for (const Graph& g : {cycle_graph(4), diamond_graph(), complete_graph(4),
                         unicyclic_star_graph(4), path_graph(4), star_graph(4)}) {
    family.insert(canonical_code(g));
  }
  c.expect(attained == family, "equality set differs from the extremal family");
  std::set<std::string> recognized;
  for (const Graph& g : connected) {
    if (recognize_connected_extremal(g) != ExtremalTag::kNone) recognized.insert(canonical_code(g));
  }
  c.expect(recognized == family, "recognizer set differs from the extremal family");
  return c;
}

Check oracle_equivalence() {
  Check c;
  auto agree = [&](const Graph& g) {
    const auto fast = alpha_prime_1(g);
    const auto slow = alpha_prime_k_bruteforce(g, 1);
    if (fast.value != slow.value || fast.feasible != slow.feasible) {
      c.fail("mismatch on " + emit_graph6(g));
    } else if (fast.witness && adjacent_pair_count(g, *fast.witness) != 1) {
      c.fail("bad witness on " + emit_graph6(g));
    }
  };
  for (const Graph& g : classes_up_to(6)) agree(g);
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      agree(oracle::labeled_graph(n, mask));
    }
  }
  std::mt19937_64 rng(20261014);
  for (int i = 0; i < 500; ++i) agree(oracle::random_sparse_graph(rng, 10, 18));
  return c;
}

Check line_graph_law() {
  Check c;
  for (const Graph& g : classes_up_to(6)) {
    const auto lg = line_graph(g);
    const auto edge_side = alpha_prime_1(g);
    const auto vertex_side = alpha_1_vertex_bruteforce(lg.line_graph);
    c.expect(edge_side.value == vertex_side.value && edge_side.feasible == vertex_side.feasible,
             "mismatch on " + emit_graph6(g));
  }
  return c;
}

Check matching_engine() {
  Check c;
  for (const Graph& g : classes_up_to(7)) {
    const auto fast = maximum_matching(g);
    const auto slow = maximum_matching_bruteforce(g, 21);
    c.expect(fast.size == slow.size, "size mismatch on " + emit_graph6(g));
    c.expect(fast.witness.size() == fast.size && is_matching(g, fast.witness),
             "witness not a matching on " + emit_graph6(g));
  }
  return c;
}

Check enumeration_counts() {
  Check c;
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    c.expect(enumerate_codes(n, false).size() == all[n - 1], "all n=" + std::to_string(n));
    c.expect(enumerate_codes(n, true).size() == connected[n - 1],
             "connected n=" + std::to_string(n));
  }
  return c;
}

Check graph6_round_trip() {
  Check c;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& code : enumerate_codes(n, false)) {
      c.expect(emit_graph6(parse_graph6(code)) == code, "corpus line " + code);
    }
  }
  for (int n = 0; n <= 20; ++n) {
    std::vector<FamilySpec> specs = {{Family::kPath, n, 0},  {Family::kCycle, n, 0},
                                     {Family::kComplete, n, 0}, {Family::kStar, n, 0},
                                     {Family::kEmpty, n, 0},  {Family::kUnicyclicStar, n, 0}};
    for (int t = 0; t <= n; ++t) specs.push_back({Family::kCompleteBipartite, n, t});
    for (int t = 0; 2 * t <= n; ++t) specs.push_back({Family::kMatchingUnion, n, t});
    if (n == 4) specs.push_back({Family::kDiamond, 4, 0});
    for (const auto& spec : specs) {
      Graph g(0);
      try {
        g = generate(spec);
      } catch (const InputError&) {
        continue;  // parameters outside the family's domain
      }
      c.expect(parse_graph6(emit_graph6(g)) == g,
               std::string(family_name(spec.family)) + " n=" + std::to_string(n));
    }
  }
  return c;
}

Check explorer() {
  Check c;
  const auto all = explore_degree_band(5, Connectivity::kAll);
  c.expect(all.minimum && *all.minimum == 2, "all-graphs minimum");
  const auto claw = canonical_code(disjoint_union(star_graph(4), empty_graph(1)));
  c.expect(std::find(all.witnesses.begin(), all.witnesses.end(), claw) != all.witnesses.end(),
           "K1,3 + K1 missing from witnesses");
  const auto connected = explore_degree_band(5, Connectivity::kConnected);
  c.expect(connected.minimum && *connected.minimum == 3, "connected minimum");
  return c;
}

struct Criterion {
  int id;
  std::string_view name;
  std::function<Check()> run;
  double budget_seconds;  // 0 for no time bound
};

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) extended |= std::string_view(argv[i]) == "--extended";

  std::vector<Criterion> criteria = {
      {1, "formula suite for paths, cycles, stars", formula_suite, 1.0},
      {2, "paths, cycles, cliques are faithful", faithful_families, 5.0},
      {3, "census verification n<=7", [] { return census(7, false); }, 0},
      {4, "order-4 connected extremal census", order_four_extremal, 0},
      {5, "polynomial solver equals brute force", oracle_equivalence, 0},
      {6, "line-graph law n<=6", line_graph_law, 0},
      {7, "blossom equals brute-force matching n<=7", matching_engine, 0},
      {8, "enumeration counts n<=7", enumeration_counts, 0},
      {9, "graph6 round trip", graph6_round_trip, 0},
      {10, "degree-band explorer n=5", explorer, 0},
  };
  if (extended) {
    criteria.push_back({3, "census verification n=8 (connected theorems, extended)",
                        [] { return census(8, true); }, 0});
  }

  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds > cr.budget_seconds) {
      result.fail("took " + std::to_string(seconds) + " s");
    }
    failures += !result.ok;
    std::printf("%s [%d] %s (%.3f s)%s%s\n", result.ok ? "PASS" : "FAIL", cr.id,
                std::string(cr.name).c_str(), seconds, result.ok ? "" : ": ",
                result.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
