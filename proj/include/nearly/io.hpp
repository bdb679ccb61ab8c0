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

// Text formats: graph6 (one-byte size field, n <= 62) and the plain
// edge-list format ("n m" header followed by m "u v" lines).

#ifndef NEARLY_IO_HPP
#define NEARLY_IO_HPP

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nearly/errors.hpp"
#include "nearly/graph.hpp"

namespace nearly {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapabilityError("graph6 emission supports n <= 62, got n=" +
                          std::to_string(n));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2 * (n > 0);
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw FormatError("graph6: empty string");
  for (char c : line) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw FormatError("graph6: byte " + std::to_string(b) + " outside [63,126]");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kGraph6MaxOrder) {
    throw FormatError("graph6: multi-byte size field (n > 62) not supported");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::string_view payload = line.substr(1);
  if (payload.size() < bytes) {
    throw FormatError("graph6: truncated payload, expected " +
                      std::to_string(bytes) + " bytes, got " +
                      std::to_string(payload.size()));
  }
  if (payload.size() > bytes) {
    throw FormatError("graph6: " + std::to_string(payload.size() - bytes) +
                      " trailing bytes after payload");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(payload[k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = static_cast<unsigned char>(payload[k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph(n, pairs);
}

// One graph per non-empty line.
inline std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

namespace detail {

inline std::vector<long long> parse_integers(std::string_view text,
                                             std::string_view what) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r')) {
      ++i;
    }
    if (i == text.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw FormatError(std::string(what) + ": expected an integer at offset " +
                        std::to_string(i));
    }
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
        text[i] != '\r') {
      throw FormatError(std::string(what) + ": unexpected character at offset " +
                        std::to_string(i));
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

// Duplicate pairs are accepted and collapsed; see build_graph for the count.
inline BuildResult parse_edge_list(std::string_view text) {
  auto nums = detail::parse_integers(text, "edge list");
  if (nums.size() < 2) throw FormatError("edge list: missing \"n m\" header");
  const long long n = nums[0];
  const long long m = nums[1];
  if (n < 0 || m < 0) throw FormatError("edge list: negative header value");
  if (nums.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw FormatError("edge list: header declares " + std::to_string(m) +
                      " edges but body holds " +
                      std::to_string((nums.size() - 2) / 2.0));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (long long i = 0; i < m; ++i) {
    pairs.emplace_back(static_cast<Vertex>(nums[2 + 2 * i]),
                       static_cast<Vertex>(nums[3 + 2 * i]));
  }
  return build_graph(static_cast<int>(n), pairs);
}

// Edge-list text if the first non-blank line holds exactly two integers,
// otherwise a graph6 corpus.
inline std::vector<Graph> read_graphs(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw FormatError("input: no graphs");
  auto end = text.find('\n', start);
  const std::string_view first =
      text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                       : end - start);
  bool edge_list = false;
  try {
    edge_list = detail::parse_integers(first, "header").size() == 2;
  } catch (const FormatError&) {
    edge_list = false;
  }
  if (edge_list) return {parse_edge_list(text).graph};
  std::istringstream in{std::string(text)};
  return read_graph6_corpus(in);
}

}  // namespace nearly

#endif  // NEARLY_IO_HPP
