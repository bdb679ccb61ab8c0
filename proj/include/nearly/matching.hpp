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

// Maximum cardinality matching on general graphs.
//
// maximum_matching runs Edmonds' blossom algorithm: grow an alternating BFS
// forest from each free vertex, contract odd cycles into their base when two
// outer vertices meet, and augment along the first path found to a free
// vertex. Vertices are scanned in increasing order and neighbours in sorted
// order, so the returned witness is a deterministic function of the input.

#ifndef NEARLY_MATCHING_HPP
#define NEARLY_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "nearly/errors.hpp"
#include "nearly/graph.hpp"

namespace nearly {

inline constexpr std::size_t kDefaultMatchingBruteCap = 20;

struct MatchingResult {
  std::size_t size = 0;
  std::vector<EdgeId> witness;  // sorted
};

namespace detail {

class Blossom {
 public:
  Blossom(const Graph& g, std::span<const std::uint8_t> excluded)
      : g_(g),
        n_(g.order()),
        excluded_(excluded),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), false),
        in_blossom_(static_cast<std::size_t>(n_), false) {}

  std::vector<Vertex> solve() {
    for (Vertex root = 0; root < n_; ++root) {
      if (is_excluded(root) || match_[root] != -1) continue;
      Vertex v = find_augmenting_path(root);
      while (v != -1) {
        const Vertex pv = parent_[v];
        const Vertex next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  bool is_excluded(Vertex v) const {
    return !excluded_.empty() && excluded_[static_cast<std::size_t>(v)];
  }

  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (is_excluded(to) || base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract it.
          const Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::span<const std::uint8_t> excluded_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

inline MatchingResult from_mates(const Graph& g, const std::vector<Vertex>& mate) {
  MatchingResult out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] > v) out.witness.push_back(*g.edge_id(v, mate[v]));
  }
  std::sort(out.witness.begin(), out.witness.end());
  out.size = out.witness.size();
  return out;
}

}  // namespace detail

// Matching of g restricted to the vertices with excluded[v] == 0. An
// empty mask means no vertex is excluded. Witness EdgeIds refer to g.
inline MatchingResult maximum_matching(const Graph& g, std::span<const std::uint8_t> excluded) {
  if (!excluded.empty() && excluded.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("exclusion mask length does not match vertex count");
  }
  return detail::from_mates(g, detail::Blossom(g, excluded).solve());
}

inline MatchingResult maximum_matching(const Graph& g) {
  return maximum_matching(g, std::span<const std::uint8_t>{});
}

// Exhaustive oracle: enumerates every matching by deciding, for the lowest
// undecided vertex, whether it stays unmatched or pairs with a later free
// neighbour. Branches that cannot beat the incumbent are cut.
inline MatchingResult maximum_matching_bruteforce(const Graph& g,
                                                  std::size_t edge_cap = kDefaultMatchingBruteCap) {
  if (g.size() > edge_cap) {
    throw CapabilityError("brute-force matching supports m <= " + std::to_string(edge_cap) +
                          ", got m=" + std::to_string(g.size()));
  }
  const int n = g.order();
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> best = mate;
  std::size_t best_size = 0;
  std::size_t size = 0;
  std::vector<bool> decided(static_cast<std::size_t>(n), false);

  auto search = [&](auto&& self, Vertex from, int undecided) -> void {
    if (size + static_cast<std::size_t>(undecided) / 2 <= best_size) return;
    Vertex v = from;
    while (v < n && decided[v]) ++v;
    if (v == n) {
      if (size > best_size) {
        best_size = size;
        best = mate;
      }
      return;
    }
    decided[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (w < v || decided[w]) continue;
      decided[w] = true;
      mate[v] = w;
      mate[w] = v;
      ++size;
      self(self, v + 1, undecided - 2);
      --size;
      mate[v] = mate[w] = -1;
      decided[w] = false;
    }
    self(self, v + 1, undecided - 1);
    decided[v] = false;
  };
  search(search, 0, n);
  return detail::from_mates(g, best);
}

inline bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
  }
  return true;
}

}  // namespace nearly

#endif  // NEARLY_MATCHING_HPP
