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

// JSON and CSV renderings of census results. Arrays are sorted so that
// output is a deterministic function of the inputs.

#ifndef NEARLY_REPORT_HPP
#define NEARLY_REPORT_HPP

#include <map>
#include <string>

#include "json.hpp"
#include "nearly/census.hpp"
#include "nearly/io.hpp"

namespace nearly {

inline constexpr std::string_view kInfeasibleConvention =
    "alpha'_k is reported as 0 (infeasible) when no edge set has exactly k adjacent pairs";

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json census = nlohmann::ordered_json::object();
  for (const auto& [n, codes] : r.equality_census) census[std::to_string(n)] = codes;
  nlohmann::ordered_json j;
  j["theorem_id"] = theorem_name(r.theorem);
  j["order_range"] = {r.min_order, r.max_order};
  j["graphs_scanned"] = r.graphs_scanned;
  j["connected_scanned"] = r.connected_scanned;
  j["counterexamples"] = r.counterexamples;
  j["equality_census"] = census;
  j["pass"] = r.pass;
  j["convention"] = kInfeasibleConvention;
  return j;
}

inline nlohmann::ordered_json to_json(const ExplorationRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["delta_band"] = {r.band_lo, r.band_hi};
  j["connectivity_mode"] = connectivity_name(r.mode);
  j["empty_band"] = r.empty_band();
  j["minimum_alpha_prime_1"] =
      r.minimum ? nlohmann::ordered_json(*r.minimum) : nlohmann::ordered_json(nullptr);
  j["witnesses"] = r.witnesses;
  j["population_size"] = r.population;
  return j;
}

inline std::string to_csv(const VerificationReport& r) {
  std::map<int, std::size_t> bad;
  for (const auto& code : r.counterexamples) ++bad[parse_graph6(code).order()];
  std::string out = "theorem_id,n,equality_count,counterexample_count\n";
  for (const auto& [n, codes] : r.equality_census) {
    out += std::string(theorem_name(r.theorem)) + "," + std::to_string(n) + "," +
           std::to_string(codes.size()) + "," + std::to_string(bad[n]) + "\n";
  }
  return out;
}

inline std::string to_csv(const ExplorationRecord& r) {
  std::string out =
      "n,delta_lo,delta_hi,connectivity_mode,population_size,minimum_alpha_prime_1,witness_count\n";
  out += std::to_string(r.n) + "," + std::to_string(r.band_lo) + "," +
         std::to_string(r.band_hi) + "," + std::string(connectivity_name(r.mode)) + "," +
         std::to_string(r.population) + "," +
         (r.minimum ? std::to_string(*r.minimum) : std::string()) + "," +
         std::to_string(r.witnesses.size()) + "\n";
  return out;
}

}  // namespace nearly

#endif  // NEARLY_REPORT_HPP
