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

// Immutable simple undirected graphs on dense vertex labels 0..n-1.
//
// Edges are stored once, normalized so that u < v, and kept in strictly
// increasing lexicographic order. The position of an edge in that order is
// its EdgeId; line graphs, matchings and solver witnesses all refer to
// edges through it.

#ifndef NEARLY_GRAPH_HPP
#define NEARLY_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearly/errors.hpp"

namespace nearly {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

  constexpr bool touches(Vertex w) const { return u == w || v == w; }
  constexpr bool adjacent_to(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }
};

struct EdgeId {
  std::size_t index = 0;

  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Throws InputError on out-of-range endpoints or self-loops; duplicate
  // pairs (in either orientation) collapse to one edge.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InputError("edge endpoint out of range: " + std::to_string(a) +
                         " " + std::to_string(b) + " (n=" + std::to_string(n) +
                         ")");
      }
      if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
      edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    neighbors_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges_) {
      neighbors_[e.u].push_back(e.v);
      neighbors_[e.v].push_back(e.u);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(),
                                                            pairs.size())) {}

  explicit Graph(int n) : Graph(n, std::span<const std::pair<Vertex, Vertex>>{}) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id.index); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return neighbors_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int best = 0;
    for (const auto& nb : neighbors_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    const Edge key = a < b ? Edge{a, b} : Edge{b, a};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return EdgeId{static_cast<std::size_t>(it - edges_.begin())};
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
};

struct BuildResult {
  Graph graph;
  std::size_t duplicates_removed = 0;
};

inline BuildResult build_graph(int n,
                               std::span<const std::pair<Vertex, Vertex>> pairs) {
  Graph g(n, pairs);
  return {g, pairs.size() - g.size()};
}

inline BuildResult build_graph(int n,
                               std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(),
                                                                   pairs.size()));
}

// Relabels vertex v to perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("permutation length does not match vertex count");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), pairs);
}

// h's vertices follow g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  auto pairs = g.edge_pairs();
  for (const Edge& e : h.edges()) {
    pairs.emplace_back(e.u + g.order(), e.v + g.order());
  }
  return Graph(g.order() + h.order(), pairs);
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
    }
  }
  return Graph(g.order(), pairs);
}

// Graph with the given vertices removed (their incident edges dropped) and the
// survivors renumbered in increasing order.
inline Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) index.at(static_cast<std::size_t>(v)) = -1;
  int next = 0;
  for (auto& i : index) {
    if (i == 0) i = next++;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) pairs.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(next, pairs);
}

struct GraphStats {
  std::vector<int> degree_sequence;  // nonincreasing
  int max_degree = 0;
  bool connected = false;
  bool has_cycle = false;
  int components = 0;
};

inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

// The null graph (n = 0) has zero components and is not connected.
inline GraphStats basic_stats(const Graph& g) {
  GraphStats s;
  s.degree_sequence.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) s.degree_sequence.push_back(g.degree(v));
  std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
  s.max_degree = s.degree_sequence.empty() ? 0 : s.degree_sequence.front();
  auto labels = component_labels(g);
  s.components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  s.connected = s.components == 1;
  s.has_cycle = static_cast<long>(g.size()) > g.order() - s.components;
  return s;
}

inline bool is_connected(const Graph& g) { return basic_stats(g).connected; }

// ---------------------------------------------------------------------------
// Named families.

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kStar,
  kCompleteBipartite,
  kDiamond,
  kUnicyclicStar,
  kMatchingUnion,
  kEmpty,
};

// `n` is the order for every family (diamond requires n = 4). `t` is the
// number of K2 components for matching_union and the size of the first part
// for complete_bipartite; other families ignore it.
struct FamilySpec {
  Family family = Family::kEmpty;
  int n = 0;
  int t = 0;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kStar: return "star";
    case Family::kCompleteBipartite: return "complete_bipartite";
    case Family::kDiamond: return "diamond";
    case Family::kUnicyclicStar: return "unicyclic_star";
    case Family::kMatchingUnion: return "matching_union";
    case Family::kEmpty: return "empty";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kComplete, Family::kStar,
                   Family::kCompleteBipartite, Family::kDiamond,
                   Family::kUnicyclicStar, Family::kMatchingUnion, Family::kEmpty}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

// Labelings: path/cycle in vertex order, star center 0, diamond = K4 minus
// {2,3}, unicyclic_star = star plus {1,2}, matching_union edges {2i, 2i+1},
// complete_bipartite parts [0, t) and [t, n).
inline Graph generate(const FamilySpec& spec) {
  const int n = spec.n;
  auto bad = [&](const char* why) {
    return InputError(std::string(family_name(spec.family)) + ": " + why);
  };
  if (n < 0) throw bad("negative order");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  switch (spec.family) {
    case Family::kPath:
      if (n < 1) throw bad("requires n >= 1");
      for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
      break;
    case Family::kCycle:
      if (n < 3) throw bad("requires n >= 3");
      for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
      pairs.emplace_back(0, n - 1);
      break;
    case Family::kComplete:
      if (n < 1) throw bad("requires n >= 1");
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
      break;
    case Family::kStar:
      if (n < 1) throw bad("requires n >= 1");
      for (Vertex v = 1; v < n; ++v) pairs.emplace_back(0, v);
      break;
    case Family::kCompleteBipartite:
      if (spec.t < 1 || spec.t >= n) throw bad("requires 1 <= t <= n-1");
      for (Vertex u = 0; u < spec.t; ++u)
        for (Vertex v = spec.t; v < n; ++v) pairs.emplace_back(u, v);
      break;
    case Family::kDiamond:
      if (n != 4) throw bad("requires n = 4");
      pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
      break;
    case Family::kUnicyclicStar:
      if (n < 3) throw bad("requires n >= 3");
      for (Vertex v = 1; v < n; ++v) pairs.emplace_back(0, v);
      pairs.emplace_back(1, 2);
      break;
    case Family::kMatchingUnion:
      if (spec.t < 0 || 2 * spec.t > n) throw bad("requires 0 <= 2t <= n");
      for (Vertex i = 0; i < spec.t; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
      break;
    case Family::kEmpty:
      break;
  }
  return Graph(n, pairs);
}

inline Graph path_graph(int n) { return generate({Family::kPath, n, 0}); }
inline Graph cycle_graph(int n) { return generate({Family::kCycle, n, 0}); }
inline Graph complete_graph(int n) { return generate({Family::kComplete, n, 0}); }
inline Graph star_graph(int n) { return generate({Family::kStar, n, 0}); }
inline Graph diamond_graph() { return generate({Family::kDiamond, 4, 0}); }
inline Graph unicyclic_star_graph(int n) {
  return generate({Family::kUnicyclicStar, n, 0});
}
inline Graph matching_union_graph(int t, int n) {
  return generate({Family::kMatchingUnion, n, t});
}
inline Graph empty_graph(int n) { return generate({Family::kEmpty, n, 0}); }

}  // namespace nearly

#endif  // NEARLY_GRAPH_HPP
