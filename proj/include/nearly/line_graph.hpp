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

#ifndef NEARLY_LINE_GRAPH_HPP
#define NEARLY_LINE_GRAPH_HPP

#include <vector>

#include "nearly/graph.hpp"

namespace nearly {

// Vertex i of the line graph is edge EdgeId{i} of the source graph, so the
// correspondence is the identity on indices; the accessors keep call sites
// explicit about which side they are on.
struct LineGraphResult {
  Graph line_graph;
  std::vector<Edge> source_edges;

  Vertex vertex_of(EdgeId id) const {
    (void)source_edges.at(id.index);
    return static_cast<Vertex>(id.index);
  }
  EdgeId edge_of(Vertex v) const {
    (void)source_edges.at(static_cast<std::size_t>(v));
    return EdgeId{static_cast<std::size_t>(v)};
  }
};

inline LineGraphResult line_graph(const Graph& g) {
  LineGraphResult out;
  out.source_edges.assign(g.edges().begin(), g.edges().end());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  // Edges through a common vertex form a clique in L(G). Two distinct simple
  // edges share at most one endpoint, so no pair is produced twice.
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> incident;
    for (Vertex w : g.neighbors(v)) {
      incident.push_back(static_cast<Vertex>(g.edge_id(v, w)->index));
    }
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        pairs.emplace_back(incident[i], incident[j]);
      }
    }
  }
  out.line_graph = Graph(static_cast<int>(g.size()), pairs);
  return out;
}

}  // namespace nearly

#endif  // NEARLY_LINE_GRAPH_HPP
