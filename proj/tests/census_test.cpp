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

#include <set>

#include <gtest/gtest.h>

#include "nearly/census.hpp"
#include "nearly/report.hpp"
#include "oracles.hpp"

namespace nearly {
namespace {

std::set<std::string> codes_of(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(canonical_code(g));
  return out;
}

TEST(Census, TheoremNames) {
  for (auto id : {TheoremId::kLowerGeneral, TheoremId::kUpperGeneral, TheoremId::kLowerConnected,
                  TheoremId::kCycleLemma}) {
    EXPECT_EQ(parse_theorem(theorem_name(id)), id);
  }
  EXPECT_THROW(parse_theorem("upper"), InputError);
}

TEST(Census, LowerConnectedOrderFourIsEveryConnectedGraph) {
  auto report = verify_theorem(TheoremId::kLowerConnected, 4);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.counterexamples.empty());
  const auto& four = report.equality_census.at(4);
  EXPECT_EQ(std::set<std::string>(four.begin(), four.end()),
            codes_of(enumerate_graphs(4, true)));
  EXPECT_EQ(four.size(), 6u);
  EXPECT_EQ(report.equality_census.at(3).size(), 2u);
}

TEST(Census, LowerGeneralEqualityIsMaxDegreeAtMostOne) {
  auto report = verify_theorem(TheoremId::kLowerGeneral, 5);
  EXPECT_TRUE(report.pass);
  std::vector<Graph> expected{empty_graph(5), matching_union_graph(1, 5),
                              matching_union_graph(2, 5)};
  const auto& five = report.equality_census.at(5);
  EXPECT_EQ(std::set<std::string>(five.begin(), five.end()), codes_of(expected));
  EXPECT_EQ(report.graphs_scanned, 1u + 2 + 4 + 11 + 34);
  EXPECT_EQ(report.connected_scanned, 1u + 1 + 2 + 6 + 21);
}

TEST(Census, UpperGeneralEqualityMatchesForestSearch) {
  auto report = verify_theorem(TheoremId::kUpperGeneral, 6);
  EXPECT_TRUE(report.pass);
  for (int n = 3; n <= 6; ++n) {
    std::set<std::string> faithful;
    for (const Graph& g : enumerate_graphs(n, false)) {
      if (find_faithful_forest(g)) faithful.insert(canonical_code(g));
    }
    const auto& got = report.equality_census.at(n);
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), faithful) << n;
  }
}

TEST(Census, CycleLemmaHoldsToSeven) {
  auto report = verify_theorem(TheoremId::kCycleLemma, 7);
  EXPECT_TRUE(report.pass);
  for (int n = 5; n <= 7; ++n) EXPECT_TRUE(report.equality_census.at(n).empty());
  EXPECT_EQ(report.equality_census.at(3).size(), 1u);  // C3
}

TEST(Census, CorpusOrderDoesNotMatter) {
  std::vector<Graph> corpus{star_graph(5), path_graph(5), cycle_graph(4)};
  std::vector<Graph> reversed(corpus.rbegin(), corpus.rend());
  auto a = verify_corpus(TheoremId::kLowerConnected, corpus);
  auto b = verify_corpus(TheoremId::kLowerConnected, reversed);
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(a.equality_census.at(5), std::vector<std::string>{canonical_code(star_graph(5))});
  EXPECT_EQ(a.equality_census.at(4), std::vector<std::string>{canonical_code(cycle_graph(4))});
}

TEST(Census, LargeCorpusGraphsUseRawGraph6) {
  const Graph petersen = oracle::petersen_graph();
  const Graph big = path_graph(11);
  auto report = verify_corpus(TheoremId::kUpperGeneral, std::vector<Graph>{big, petersen});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.max_order, 11);
  // Petersen has a perfect matching, so it is faithful with value 5.
  EXPECT_EQ(report.equality_census.at(10).size(), 1u);
  EXPECT_EQ(report.equality_census.at(11), std::vector<std::string>{emit_graph6(big)});
}

TEST(Census, WorkerCountDoesNotChangeReport) {
  CensusOptions one{8, 1};
  CensusOptions four{8, 4};
  EXPECT_EQ(to_json(verify_theorem(TheoremId::kUpperGeneral, 6, one)).dump(),
            to_json(verify_theorem(TheoremId::kUpperGeneral, 6, four)).dump());
}

TEST(Census, JsonFieldNames) {
  auto j = to_json(verify_theorem(TheoremId::kLowerGeneral, 3));
  for (const char* key : {"theorem_id", "order_range", "graphs_scanned", "connected_scanned",
                          "counterexamples", "equality_census", "pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["theorem_id"], "lower-general");
  EXPECT_EQ(j["order_range"], nlohmann::ordered_json({1, 3}));

  auto e = to_json(explore_degree_band(5, Connectivity::kAll));
  for (const char* key : {"n", "delta_band", "connectivity_mode", "minimum_alpha_prime_1",
                          "witnesses", "population_size"}) {
    EXPECT_TRUE(e.contains(key)) << key;
  }
}

TEST(Census, CsvOneRowPerOrder) {
  auto csv = to_csv(verify_theorem(TheoremId::kLowerConnected, 5));
  EXPECT_EQ(csv,
            "theorem_id,n,equality_count,counterexample_count\n"
            "lower-connected,3,2,0\n"
            "lower-connected,4,6,0\n"
            "lower-connected,5,1,0\n");
}

TEST(Explore, SmallOrdersHaveEmptyBand) {
  for (int n = 0; n <= 4; ++n) {
    auto r = explore_degree_band(n, Connectivity::kAll);
    EXPECT_TRUE(r.empty_band());
    EXPECT_FALSE(r.minimum.has_value());
    EXPECT_EQ(r.population, 0u);
  }
  EXPECT_TRUE(to_json(explore_degree_band(4, Connectivity::kAll))["minimum_alpha_prime_1"]
                  .is_null());
}

TEST(Explore, OrderFive) {
  auto all = explore_degree_band(5, Connectivity::kAll);
  ASSERT_TRUE(all.minimum);
  EXPECT_EQ(*all.minimum, 2u);
  EXPECT_EQ(all.population, 12u);
  const std::string claw_plus_point =
      canonical_code(disjoint_union(star_graph(4), empty_graph(1)));
  EXPECT_NE(std::find(all.witnesses.begin(), all.witnesses.end(), claw_plus_point),
            all.witnesses.end());
  EXPECT_EQ(all.witnesses.size(), 4u);

  auto connected = explore_degree_band(5, Connectivity::kConnected);
  ASSERT_TRUE(connected.minimum);
  EXPECT_EQ(*connected.minimum, 3u);
  EXPECT_EQ(connected.population, 8u);
}

TEST(Explore, WitnessesAttainTheMinimum) {
  for (int n = 5; n <= 7; ++n) {
    for (auto mode : {Connectivity::kAll, Connectivity::kConnected}) {
      auto r = explore_degree_band(n, mode);
      ASSERT_TRUE(r.minimum);
      ASSERT_FALSE(r.witnesses.empty());
      EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
      for (const auto& w : r.witnesses) {
        const Graph g = parse_graph6(w);
        EXPECT_EQ(alpha_prime_k_bruteforce(g, 1).value, *r.minimum) << w;
        EXPECT_GE(g.max_degree(), 3);
        EXPECT_LE(g.max_degree(), n - 2);
        if (mode == Connectivity::kConnected) {
          EXPECT_TRUE(is_connected(g));
        }
      }
    }
  }
}

TEST(Explore, CorpusOfOtherOrdersIsIgnored) {
  auto graphs = enumerate_graphs(5, false);
  auto six = enumerate_graphs(6, false);
  graphs.insert(graphs.end(), six.begin(), six.end());
  EXPECT_EQ(to_json(explore_corpus(5, Connectivity::kAll, graphs)),
            to_json(explore_degree_band(5, Connectivity::kAll)));
}

}  // namespace
}  // namespace nearly
