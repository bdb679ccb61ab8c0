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

// Solvers for the k-nearly edge independence number.
//
// A k-nearly edge independent set is an edge set containing exactly k
// unordered pairs of edges that share an endpoint; pairs are counted as the
// edges the set induces in the line graph, so the three edges of a triangle
// make three pairs. When no edge set has exactly k pairs the result is
// reported as value 0, infeasible, without a witness.
//
// For k = 1 a solution is one path on three vertices plus a matching on the
// remaining vertices, which gives the polynomial alpha_prime_1: try every
// pair of edges through a common vertex, delete its three endpoints, and add
// a maximum matching of what is left.

#ifndef NEARLY_SOLVER_HPP
#define NEARLY_SOLVER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearly/errors.hpp"
#include "nearly/graph.hpp"
#include "nearly/matching.hpp"

namespace nearly {

struct SolverLimits {
  std::size_t edge_cap = 20;   // brute-force edge subsets
  std::size_t vertex_cap = 24; // brute-force vertex subsets
};

// Subset enumeration keeps a 16-bit count per subset; this bounds the table.
inline constexpr std::size_t kBruteForceHardLimit = 26;

template <typename Element>
struct SolveResult {
  int k = 0;
  std::size_t value = 0;
  bool feasible = false;
  std::optional<std::vector<Element>> witness;  // sorted when present
};

using EdgeSolveResult = SolveResult<EdgeId>;
using VertexSolveResult = SolveResult<Vertex>;

// Number of unordered pairs of edges in `edges` sharing an endpoint.
inline std::size_t adjacent_pair_count(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<std::size_t> incident(static_cast<std::size_t>(g.order()), 0);
  std::vector<bool> seen(g.size(), false);
  for (EdgeId id : edges) {
    if (id.index >= g.size()) {
      throw InputError("edge id " + std::to_string(id.index) + " out of range (m=" +
                       std::to_string(g.size()) + ")");
    }
    if (seen[id.index]) {
      throw InputError("edge id " + std::to_string(id.index) + " repeated");
    }
    seen[id.index] = true;
    ++incident[g.edge(id).u];
    ++incident[g.edge(id).v];
  }
  // Two distinct simple edges share at most one endpoint.
  std::size_t pairs = 0;
  for (std::size_t c : incident) pairs += c * (c - (c > 0)) / 2;
  return pairs;
}

// Number of edges of g with both endpoints in `vertices`.
inline std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : vertices) in.at(static_cast<std::size_t>(v)) = true;
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

namespace detail {

// Scans subsets of items in increasing bitmask order and returns the first
// of maximum cardinality with exactly `target` interacting pairs.
// neighbor_masks[i] holds the items that pair with item i. Counts saturate at
// target + 1, which is all the comparison needs.
inline std::optional<std::uint64_t> first_max_subset(
    std::span<const std::uint64_t> neighbor_masks, std::size_t target) {
  const std::size_t count = neighbor_masks.size();
  const std::size_t saturate = target + 1;
  std::vector<std::uint16_t> pairs(std::size_t{1} << count, 0);
  std::optional<std::uint64_t> best;
  int best_size = -1;
  if (target == 0) {
    best = 0;
    best_size = 0;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    const std::size_t total =
        pairs[rest] + static_cast<std::size_t>(std::popcount(neighbor_masks[low] & rest));
    pairs[mask] = static_cast<std::uint16_t>(std::min(total, saturate));
    if (pairs[mask] == target && std::popcount(mask) > best_size) {
      best = mask;
      best_size = std::popcount(mask);
    }
  }
  return best;
}

}  // namespace detail

inline EdgeSolveResult alpha_prime_k_bruteforce(const Graph& g, int k,
                                                const SolverLimits& limits = {}) {
  if (k < 0) throw InputError("k must be nonnegative");
  const std::size_t m = g.size();
  if (static_cast<std::size_t>(k) > m * (m - (m > 0)) / 2) {
    return EdgeSolveResult{k, 0, false, std::nullopt};
  }
  if (m > limits.edge_cap || m > kBruteForceHardLimit) {
    throw CapabilityError("brute-force alpha'_k supports m <= " +
                          std::to_string(std::min(limits.edge_cap, kBruteForceHardLimit)) +
                          ", got m=" + std::to_string(m));
  }
  std::vector<std::uint64_t> masks(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && g.edges()[i].adjacent_to(g.edges()[j])) masks[i] |= std::uint64_t{1} << j;
    }
  }
  EdgeSolveResult out;
  out.k = k;
  const auto best = detail::first_max_subset(masks, static_cast<std::size_t>(k));
  if (!best) return out;
  out.feasible = true;
  out.witness.emplace();
  for (std::size_t i = 0; i < m; ++i) {
    if ((*best >> i) & 1) out.witness->push_back(EdgeId{i});
  }
  out.value = out.witness->size();
  return out;
}

// Largest vertex set inducing exactly one edge.
inline VertexSolveResult alpha_1_vertex_bruteforce(const Graph& g,
                                                   const SolverLimits& limits = {}) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n > limits.vertex_cap || n > kBruteForceHardLimit) {
    throw CapabilityError("brute-force alpha_1 supports n <= " +
                          std::to_string(std::min(limits.vertex_cap, kBruteForceHardLimit)) +
                          ", got n=" + std::to_string(n));
  }
  std::vector<std::uint64_t> masks(n, 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  VertexSolveResult out;
  out.k = 1;
  const auto best = detail::first_max_subset(masks, 1);
  if (!best) return out;
  out.feasible = true;
  out.witness.emplace();
  for (std::size_t v = 0; v < n; ++v) {
    if ((*best >> v) & 1) out.witness->push_back(static_cast<Vertex>(v));
  }
  out.value = out.witness->size();
  return out;
}

inline EdgeSolveResult alpha_prime_1(const Graph& g) {
  EdgeSolveResult out;
  out.k = 1;
  if (g.max_degree() <= 1) return out;

  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t ceiling = (n + 1) / 2;
  std::vector<std::uint8_t> excluded(n, 0);
  std::vector<EdgeId> best;
  auto try_center = [&](Vertex center) {
    const auto nb = g.neighbors(center);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        excluded[center] = excluded[nb[i]] = excluded[nb[j]] = 1;
        auto matching = maximum_matching(g, excluded);
        excluded[center] = excluded[nb[i]] = excluded[nb[j]] = 0;
        if (matching.size + 2 > best.size()) {
          best = std::move(matching.witness);
          best.push_back(*g.edge_id(center, nb[i]));
          best.push_back(*g.edge_id(center, nb[j]));
          if (best.size() == ceiling) return true;
        }
      }
    }
    return false;
  };
  for (Vertex center = 0; center < g.order(); ++center) {
    if (try_center(center)) break;
  }
  std::sort(best.begin(), best.end());
  out.feasible = true;
  out.value = best.size();
  out.witness = std::move(best);
  return out;
}

// k = 0 is the matching number, k = 1 uses the polynomial route, larger k
// falls back to subset enumeration.
inline EdgeSolveResult alpha_prime_k(const Graph& g, int k, const SolverLimits& limits = {}) {
  if (k < 0) throw InputError("k must be nonnegative");
  if (k == 1) return alpha_prime_1(g);
  if (k == 0) {
    auto matching = maximum_matching(g);
    EdgeSolveResult out;
    out.k = 0;
    out.feasible = true;
    out.value = matching.size;
    out.witness = std::move(matching.witness);
    return out;
  }
  return alpha_prime_k_bruteforce(g, k, limits);
}

}  // namespace nearly

#endif  // NEARLY_SOLVER_HPP
