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

// Canonical codes for isomorph rejection on small graphs.
//
// Vertices are first partitioned by colour refinement seeded with degrees;
// the resulting ordered cells are isomorphism-invariant. Among all labelings
// that place each cell on its block of positions, the one whose upper
// triangle (column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...) is
// lexicographically smallest is selected by branch and bound. The code is
// the graph6 string of that labeling, so codes decode back to graphs.

#ifndef NEARLY_CANONICAL_HPP
#define NEARLY_CANONICAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nearly/errors.hpp"
#include "nearly/graph.hpp"
#include "nearly/io.hpp"

namespace nearly {

inline constexpr int kDefaultCanonicalMaxOrder = 10;

struct CanonicalForm {
  std::string code;
  // labeling[v] = canonical position of vertex v.
  std::vector<Vertex> labeling;
};

// Stable colour refinement; returned colours are ranks in [0, #cells).
inline std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int cells = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == cells) break;
    cells = now;
  }
  return color;
}

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
    const auto color = refine_colors(g);
    std::vector<Vertex> by_color(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) by_color[v] = v;
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](Vertex a, Vertex b) { return color[a] < color[b]; });
    slot_color_.resize(static_cast<std::size_t>(n_));
    cell_members_.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) {
      slot_color_[p] = color[by_color[p]];
      cell_members_[color[by_color[p]]] |= 1u << by_color[p];
    }
    order_.assign(static_cast<std::size_t>(n_), 0);
    best_order_ = order_;
    column_.assign(static_cast<std::size_t>(n_), 0);
    best_column_ = column_;
  }

  std::vector<Vertex> run() {
    if (n_ > 0) descend(0, 0, true);
    return best_order_;
  }

 private:
  // Column j packs bits x(0,j)..x(j-1,j) with x(0,j) most significant, so
  // integer comparison matches lexicographic bit order.
  void descend(int pos, std::uint32_t used, bool below) {
    std::uint32_t candidates = cell_members_[slot_color_[pos]] & ~used;
    while (candidates) {
      const Vertex v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      std::uint32_t col = 0;
      for (int i = 0; i < pos; ++i) col = (col << 1) | ((adj_[order_[i]] >> v) & 1u);
      bool next_below = below;
      if (!below) {
        if (col > best_column_[pos]) continue;
        next_below = col < best_column_[pos];
      }
      order_[pos] = v;
      column_[pos] = col;
      if (pos + 1 == n_) {
        if (next_below) {
          best_order_ = order_;
          best_column_ = column_;
        }
      } else {
        descend(pos + 1, used | (1u << v), next_below);
      }
      // A "below" prefix always completes to a new best, which the remaining
      // siblings share up to pos and must now beat.
      if (next_below) below = false;
    }
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> slot_color_;
  std::vector<std::uint32_t> cell_members_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::vector<std::uint32_t> column_;
  std::vector<std::uint32_t> best_column_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g,
                                    int max_order = kDefaultCanonicalMaxOrder) {
  if (g.order() > max_order) {
    throw CapabilityError("canonical code supports n <= " + std::to_string(max_order) +
                          ", got n=" + std::to_string(g.order()));
  }
  if (g.order() > 31) throw CapabilityError("canonical code supports n <= 31");
  const auto order = detail::CanonicalSearch(g).run();
  CanonicalForm out;
  out.labeling.assign(static_cast<std::size_t>(g.order()), 0);
  for (int p = 0; p < g.order(); ++p) out.labeling[order[p]] = p;
  out.code = emit_graph6(relabel(g, out.labeling));
  return out;
}

inline std::string canonical_code(const Graph& g,
                                  int max_order = kDefaultCanonicalMaxOrder) {
  return canonical_form(g, max_order).code;
}

inline Graph canonical_graph(const Graph& g,
                             int max_order = kDefaultCanonicalMaxOrder) {
  return parse_graph6(canonical_code(g, max_order));
}

inline bool is_isomorphic(const Graph& g, const Graph& h,
                          int max_order = kDefaultCanonicalMaxOrder) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_code(g, max_order) == canonical_code(h, max_order);
}

}  // namespace nearly

#endif  // NEARLY_CANONICAL_HPP
