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

// Theorem verification by census, and the degree-band explorer.
//
// Each theorem is checked two-sidedly on every graph of the population: the
// bound must hold, and the set of graphs attaining it must coincide with the
// set accepted by the matching recognizer. A graph failing either direction
// is reported by canonical code.

#ifndef NEARLY_CENSUS_HPP
#define NEARLY_CENSUS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearly/canonical.hpp"
#include "nearly/enumerate.hpp"
#include "nearly/errors.hpp"
#include "nearly/graph.hpp"
#include "nearly/parallel.hpp"
#include "nearly/recognizers.hpp"
#include "nearly/solver.hpp"

namespace nearly {

enum class TheoremId { kLowerGeneral, kUpperGeneral, kLowerConnected, kCycleLemma };

inline std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::kLowerGeneral: return "lower-general";
    case TheoremId::kUpperGeneral: return "upper-general";
    case TheoremId::kLowerConnected: return "lower-connected";
    case TheoremId::kCycleLemma: return "cycle-lemma";
  }
  return "?";
}

inline TheoremId parse_theorem(std::string_view name) {
  for (TheoremId id : {TheoremId::kLowerGeneral, TheoremId::kUpperGeneral,
                       TheoremId::kLowerConnected, TheoremId::kCycleLemma}) {
    if (theorem_name(id) == name) return id;
  }
  throw InputError("unknown theorem id: " + std::string(name));
}

struct CensusOptions {
  int enumeration_cap = kDefaultEnumerationMaxOrder;
  unsigned workers = 1;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::kLowerGeneral;
  int min_order = 0;
  int max_order = 0;
  std::size_t graphs_scanned = 0;
  std::size_t connected_scanned = 0;
  std::vector<std::string> counterexamples;  // sorted canonical codes
  std::map<int, std::vector<std::string>> equality_census;
  bool pass = true;
};

// Codes in reports are canonical up to this order; larger corpus graphs are
// reported by their input graph6 string.
inline constexpr int kReportCanonicalMaxOrder = kDefaultCanonicalMaxOrder;

inline std::string report_code(const Graph& g) {
  return g.order() <= kReportCanonicalMaxOrder ? canonical_code(g) : emit_graph6(g);
}

namespace detail {

struct GraphVerdict {
  bool connected = false;
  bool in_scope = false;
  bool attains = false;
  bool counterexample = false;
};

inline int theorem_min_order(TheoremId id) {
  return id == TheoremId::kLowerConnected || id == TheoremId::kCycleLemma ? 3 : 1;
}

inline GraphVerdict check_graph(TheoremId id, const Graph& g) {
  GraphVerdict v;
  const auto stats = basic_stats(g);
  v.connected = stats.connected;
  const int n = g.order();
  if (n < theorem_min_order(id)) return v;
  const auto value = alpha_prime_1(g);
  switch (id) {
    case TheoremId::kLowerGeneral: {
      v.in_scope = true;
      v.attains = value.value == 0;
      const bool bound_ok = value.feasible || value.value == 0;
      v.counterexample = !bound_ok || v.attains != recognize_trivial_family(g);
      break;
    }
    case TheoremId::kUpperGeneral: {
      v.in_scope = true;
      const auto ceiling = static_cast<std::size_t>(n + 1) / 2;
      v.attains = value.value == ceiling;
      const bool forest = find_faithful_forest(g).has_value();
      const bool solver_route = n >= 3 && is_faithful(g).faithful;
      v.counterexample = value.value > ceiling || v.attains != forest || solver_route != forest;
      break;
    }
    case TheoremId::kLowerConnected: {
      if (!stats.connected) break;
      v.in_scope = true;
      v.attains = value.value == 2;
      const bool recognized = recognize_connected_extremal(g) != ExtremalTag::kNone;
      v.counterexample = value.value < 2 || v.attains != recognized;
      break;
    }
    case TheoremId::kCycleLemma: {
      if (!stats.connected || !stats.has_cycle) break;
      v.in_scope = true;
      v.attains = value.value == 2;
      v.counterexample = v.attains && n > 4;
      break;
    }
  }
  return v;
}

}  // namespace detail

inline VerificationReport verify_corpus(TheoremId id, std::span<const Graph> corpus,
                                        unsigned workers = 1) {
  VerificationReport report;
  report.theorem = id;
  if (!corpus.empty()) {
    auto [lo, hi] = std::minmax_element(corpus.begin(), corpus.end(),
                                        [](const Graph& a, const Graph& b) {
                                          return a.order() < b.order();
                                        });
    report.min_order = std::max(lo->order(), detail::theorem_min_order(id));
    report.max_order = hi->order();
    for (int n = report.min_order; n <= report.max_order; ++n) report.equality_census[n];
  }
  struct Row {
    detail::GraphVerdict verdict;
    std::string code;
  };
  auto rows = detail::parallel_map<Row>(corpus.size(), workers, [&](std::size_t i) {
    Row row{detail::check_graph(id, corpus[i]), {}};
    if (row.verdict.attains || row.verdict.counterexample) row.code = report_code(corpus[i]);
    return row;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    ++report.graphs_scanned;
    report.connected_scanned += row.verdict.connected;
    if (row.verdict.counterexample) report.counterexamples.push_back(row.code);
    if (row.verdict.in_scope && row.verdict.attains) {
      report.equality_census[corpus[i].order()].push_back(row.code);
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  for (auto& [n, codes] : report.equality_census) std::sort(codes.begin(), codes.end());
  report.pass = report.counterexamples.empty();
  return report;
}

// Census over every class of order 1..max_n.
inline VerificationReport verify_theorem(TheoremId id, int max_n,
                                         const CensusOptions& options = {}) {
  if (max_n < 1) throw InputError("max_n must be at least 1");
  const EnumerationOptions enumeration{options.enumeration_cap, options.workers};
  std::vector<Graph> population;
  for (int n = 1; n <= max_n; ++n) {
    auto graphs = enumerate_graphs(n, false, enumeration);
    population.insert(population.end(), graphs.begin(), graphs.end());
  }
  auto report = verify_corpus(id, population, options.workers);
  report.min_order = detail::theorem_min_order(id);
  report.max_order = max_n;
  for (int n = report.min_order; n <= max_n; ++n) report.equality_census[n];
  return report;
}

// ---------------------------------------------------------------------------
// Degree band 3 <= max degree <= n - 2.

enum class Connectivity { kAll, kConnected };

inline std::string_view connectivity_name(Connectivity c) {
  return c == Connectivity::kAll ? "all" : "connected";
}

struct ExplorationRecord {
  int n = 0;
  int band_lo = 3;
  int band_hi = 0;
  Connectivity mode = Connectivity::kAll;
  std::optional<std::size_t> minimum;  // empty when the band or population is empty
  std::vector<std::string> witnesses;  // sorted canonical codes attaining the minimum
  std::size_t population = 0;

  bool empty_band() const { return band_lo > band_hi; }
};

// Graphs of other orders in the corpus are ignored.
inline ExplorationRecord explore_corpus(int n, Connectivity mode, std::span<const Graph> corpus,
                                        unsigned workers = 1) {
  ExplorationRecord record;
  record.n = n;
  record.band_hi = n - 2;
  record.mode = mode;
  if (record.empty_band()) return record;

  struct Row {
    bool in_band = false;
    std::size_t value = 0;
  };
  auto rows = detail::parallel_map<Row>(corpus.size(), workers, [&](std::size_t i) {
    const Graph& g = corpus[i];
    Row row;
    const int delta = g.max_degree();
    row.in_band = g.order() == n && delta >= record.band_lo && delta <= record.band_hi &&
                  (mode == Connectivity::kAll || is_connected(g));
    if (row.in_band) row.value = alpha_prime_1(g).value;
    return row;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].in_band) continue;
    ++record.population;
    if (!record.minimum || rows[i].value < *record.minimum) {
      record.minimum = rows[i].value;
      record.witnesses.clear();
    }
    if (rows[i].value == *record.minimum) record.witnesses.push_back(report_code(corpus[i]));
  }
  std::sort(record.witnesses.begin(), record.witnesses.end());
  return record;
}

inline ExplorationRecord explore_degree_band(int n, Connectivity mode,
                                             const CensusOptions& options = {}) {
  if (n < 0) throw InputError("negative order");
  if (n - 2 < 3) return explore_corpus(n, mode, {}, options.workers);
  const auto graphs = enumerate_graphs(n, mode == Connectivity::kConnected,
                                       {options.enumeration_cap, options.workers});
  return explore_corpus(n, mode, graphs, options.workers);
}

}  // namespace nearly

#endif  // NEARLY_CENSUS_HPP
