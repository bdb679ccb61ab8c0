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

#include <random>

#include <gtest/gtest.h>

#include "nearly/matching.hpp"
#include "oracles.hpp"

namespace nearly {
namespace {

void expect_valid_maximal(const Graph& g, const MatchingResult& r) {
  EXPECT_EQ(r.witness.size(), r.size);
  EXPECT_TRUE(is_matching(g, r.witness));
  // No edge joins two unmatched vertices.
  std::vector<bool> matched(static_cast<std::size_t>(g.order()), false);
  for (EdgeId id : r.witness) matched[g.edge(id).u] = matched[g.edge(id).v] = true;
  for (const Edge& e : g.edges()) EXPECT_TRUE(matched[e.u] || matched[e.v]);
}

TEST(MaximumMatching, Examples) {
  EXPECT_EQ(maximum_matching(path_graph(4)).size, 2u);
  EXPECT_EQ(maximum_matching(star_graph(8)).size, 1u);
  EXPECT_EQ(maximum_matching(oracle::petersen_graph()).size, 5u);
  EXPECT_EQ(maximum_matching(cycle_graph(7)).size, 3u);
  EXPECT_EQ(maximum_matching(empty_graph(4)).size, 0u);
  EXPECT_EQ(maximum_matching(Graph(0)).size, 0u);
}

TEST(MaximumMatching, OddCyclesNeedBlossoms) {
  // Two triangles joined by a path: greedy augmenting without contraction
  // misses the perfect matching.
  Graph g(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  EXPECT_EQ(maximum_matching(g).size, 4u);
  for (int n = 3; n <= 13; n += 2) {
    EXPECT_EQ(maximum_matching(complete_graph(n)).size, static_cast<std::size_t>(n / 2));
  }
}

TEST(MaximumMatching, ExclusionMask) {
  std::vector<std::uint8_t> mask{0, 1, 0, 0, 0};
  auto r = maximum_matching(path_graph(5), mask);
  EXPECT_EQ(r.size, 1u);
  EXPECT_EQ(path_graph(5).edge(r.witness[0]), (Edge{2, 3}));
  EXPECT_THROW(maximum_matching(path_graph(5), std::vector<std::uint8_t>{0, 1}), InputError);
}

TEST(MaximumMatching, Deterministic) {
  Graph g = oracle::petersen_graph();
  EXPECT_EQ(maximum_matching(g).witness, maximum_matching(g).witness);
}

TEST(BruteForceMatching, Examples) {
  EXPECT_EQ(maximum_matching_bruteforce(complete_graph(4)).size, 2u);
  EXPECT_EQ(maximum_matching_bruteforce(empty_graph(3)).size, 0u);
  EXPECT_EQ(maximum_matching_bruteforce(diamond_graph()).size, 2u);
  EXPECT_THROW(maximum_matching_bruteforce(complete_graph(7)), CapabilityError);
  EXPECT_EQ(maximum_matching_bruteforce(complete_graph(7), 21).size, 3u);
}

TEST(MaximumMatching, AgreesWithBruteForceExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = oracle::labeled_graph(n, mask);
      auto fast = maximum_matching(g);
      ASSERT_EQ(fast.size, maximum_matching_bruteforce(g).size) << "n=" << n << " mask=" << mask;
      expect_valid_maximal(g, fast);
    }
  }
}

TEST(MaximumMatching, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = oracle::random_sparse_graph(rng, 14, 18);
    auto fast = maximum_matching(g);
    auto slow = maximum_matching_bruteforce(g);
    ASSERT_EQ(fast.size, slow.size);
    EXPECT_TRUE(is_matching(g, slow.witness));
    expect_valid_maximal(g, fast);
    auto relabeled = relabel(g, oracle::random_permutation(rng, g.order()));
    EXPECT_EQ(maximum_matching(relabeled).size, fast.size);
  }
}

}  // namespace
}  // namespace nearly
