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

// Isomorphism-class enumeration at small orders.
//
// Every graph on n vertices is some graph on n-1 vertices plus a vertex with
// a chosen neighbourhood, so the classes of order n are obtained by extending
// one representative per class of order n-1 in all 2^(n-1) ways and
// deduplicating by canonical code. Output is sorted by code.

#ifndef NEARLY_ENUMERATE_HPP
#define NEARLY_ENUMERATE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "nearly/canonical.hpp"
#include "nearly/errors.hpp"
#include "nearly/graph.hpp"
#include "nearly/io.hpp"
#include "nearly/parallel.hpp"

namespace nearly {

inline constexpr int kDefaultEnumerationMaxOrder = 8;

struct EnumerationOptions {
  int max_order = kDefaultEnumerationMaxOrder;
  unsigned workers = 1;
};

inline std::vector<std::string> extend_by_one_vertex(const std::vector<std::string>& parents,
                                                     unsigned workers) {
  auto children = detail::parallel_map<std::vector<std::string>>(
      parents.size(), workers, [&](std::size_t i) {
        const Graph parent = parse_graph6(parents[i]);
        const int k = parent.order();
        std::vector<std::string> out;
        out.reserve(std::size_t{1} << k);
        auto pairs = parent.edge_pairs();
        const std::size_t base = pairs.size();
        for (unsigned long long nbhd = 0; nbhd < (1ull << k); ++nbhd) {
          pairs.resize(base);
          for (Vertex v = 0; v < k; ++v) {
            if ((nbhd >> v) & 1) pairs.emplace_back(v, k);
          }
          out.push_back(canonical_code(Graph(k + 1, pairs), kGraph6MaxOrder));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      });
  std::vector<std::string> merged;
  for (auto& c : children) merged.insert(merged.end(), c.begin(), c.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

// Canonical codes of all classes of order n (connected ones if requested).
inline std::vector<std::string> enumerate_codes(int n, bool connected_only,
                                                const EnumerationOptions& options = {}) {
  if (n < 0) throw InputError("negative order");
  if (n > options.max_order) {
    throw CapabilityError("enumeration supports n <= " + std::to_string(options.max_order) +
                          ", got n=" + std::to_string(n) +
                          "; supply a graph6 corpus for larger orders");
  }
  std::vector<std::string> codes{emit_graph6(Graph(0))};
  for (int k = 1; k <= n; ++k) codes = extend_by_one_vertex(codes, options.workers);
  if (connected_only) {
    std::erase_if(codes, [](const std::string& c) { return !is_connected(parse_graph6(c)); });
  }
  return codes;
}

// One canonically labeled representative per class.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only,
                                           const EnumerationOptions& options = {}) {
  std::vector<Graph> out;
  for (const auto& code : enumerate_codes(n, connected_only, options)) {
    out.push_back(parse_graph6(code));
  }
  return out;
}

}  // namespace nearly

#endif  // NEARLY_ENUMERATE_HPP
