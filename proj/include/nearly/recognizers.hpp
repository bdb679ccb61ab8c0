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

// Recognizers for the extremal families of alpha'_1.
//
//  * trivial family: disjoint unions of K2 and K1, i.e. max degree <= 1;
//  * faithful graphs: a spanning forest P3 + t K2 (plus one K1 when n is
//    even) exists;
//  * connected extremal family: C3, C4, D4, K4, U_{1,3}, P4 and stars.
//
// Each recognizer here is structural except is_faithful, which reads the
// verdict off the alpha'_1 solver. find_faithful_forest searches for the
// forest directly and serves as its independent counterpart.

#ifndef NEARLY_RECOGNIZERS_HPP
#define NEARLY_RECOGNIZERS_HPP

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "nearly/canonical.hpp"
#include "nearly/errors.hpp"
#include "nearly/graph.hpp"
#include "nearly/solver.hpp"

namespace nearly {

inline bool recognize_trivial_family(const Graph& g) { return g.max_degree() <= 1; }

struct FaithfulResult {
  bool faithful = false;
  std::optional<std::vector<EdgeId>> forest_witness;  // sorted
};

inline FaithfulResult is_faithful(const Graph& g) {
  if (g.order() < 3) {
    throw InputError("faithfulness is defined for n >= 3, got n=" +
                     std::to_string(g.order()));
  }
  const auto n = static_cast<std::size_t>(g.order());
  auto solved = alpha_prime_1(g);
  FaithfulResult out;
  out.faithful = solved.feasible && solved.value == (n + 1) / 2;
  if (out.faithful) out.forest_witness = std::move(solved.witness);
  return out;
}

// Direct search for a spanning forest P3 + t K2 (+ K1 when n is even): pick
// the P3, then pair up the remaining vertices from the lowest one upward.
// Returns nullopt for n < 3.
inline std::optional<std::vector<EdgeId>> find_faithful_forest(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  std::vector<EdgeId> chosen;

  auto pair_up = [&](auto&& self, Vertex from, bool isolated_left) -> bool {
    Vertex x = from;
    while (x < n && covered[x]) ++x;
    if (x == n) return true;
    covered[x] = true;
    for (Vertex y : g.neighbors(x)) {
      if (y < x || covered[y]) continue;
      covered[y] = true;
      chosen.push_back(*g.edge_id(x, y));
      if (self(self, x + 1, isolated_left)) return true;
      chosen.pop_back();
      covered[y] = false;
    }
    if (isolated_left && self(self, x + 1, false)) return true;
    covered[x] = false;
    return false;
  };

  for (Vertex center = 0; center < n; ++center) {
    const auto nb = g.neighbors(center);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        covered.assign(static_cast<std::size_t>(n), false);
        covered[center] = covered[nb[i]] = covered[nb[j]] = true;
        chosen = {*g.edge_id(center, nb[i]), *g.edge_id(center, nb[j])};
        if (pair_up(pair_up, 0, n % 2 == 0)) {
          std::sort(chosen.begin(), chosen.end());
          return chosen;
        }
      }
    }
  }
  return std::nullopt;
}

enum class ExtremalTag { kC3, kC4, kD4, kK4, kU13, kP4, kStar, kNone };

inline std::string_view tag_name(ExtremalTag tag) {
  switch (tag) {
    case ExtremalTag::kC3: return "C3";
    case ExtremalTag::kC4: return "C4";
    case ExtremalTag::kD4: return "D4";
    case ExtremalTag::kK4: return "K4";
    case ExtremalTag::kU13: return "U13";
    case ExtremalTag::kP4: return "P4";
    case ExtremalTag::kStar: return "STAR";
    case ExtremalTag::kNone: return "NONE";
  }
  return "?";
}

// K_{1,2} = P3 is reported as STAR.
inline ExtremalTag recognize_connected_extremal(const Graph& g) {
  const int n = g.order();
  if (n < 3) return ExtremalTag::kNone;
  const auto stats = basic_stats(g);
  if (!stats.connected) return ExtremalTag::kNone;

  const auto& deg = stats.degree_sequence;
  if (deg.front() == n - 1 && std::all_of(deg.begin() + 1, deg.end(), [](int d) { return d == 1; })) {
    return ExtremalTag::kStar;
  }
  if (n == 3) return g.size() == 3 ? ExtremalTag::kC3 : ExtremalTag::kNone;
  if (n != 4) return ExtremalTag::kNone;

  auto confirm = [&](const Graph& model, ExtremalTag tag) {
    return canonical_code(g) == canonical_code(model) ? tag : ExtremalTag::kNone;
  };
  switch (g.size()) {
    case 3: return confirm(path_graph(4), ExtremalTag::kP4);
    case 4:
      return deg.front() == 3 ? confirm(unicyclic_star_graph(4), ExtremalTag::kU13)
                              : confirm(cycle_graph(4), ExtremalTag::kC4);
    case 5: return confirm(diamond_graph(), ExtremalTag::kD4);
    case 6: return confirm(complete_graph(4), ExtremalTag::kK4);
    default: return ExtremalTag::kNone;
  }
}

}  // namespace nearly

#endif  // NEARLY_RECOGNIZERS_HPP
