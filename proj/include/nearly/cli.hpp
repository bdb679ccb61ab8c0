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

// Command-line front end. run_main parses argv into a RunConfig and calls
// run; both write only to the streams they are given so the whole surface
// can be driven in-process.
//
// Exit status: 0 success, 1 a verification counterexample was found, 2 input
// or format error, 3 capability error. Every failure writes one line
// "error: <kind>: <reason>" to the diagnostic stream.

#ifndef NEARLY_CLI_HPP
#define NEARLY_CLI_HPP

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nearly/census.hpp"
#include "nearly/graph.hpp"
#include "nearly/io.hpp"
#include "nearly/line_graph.hpp"
#include "nearly/matching.hpp"
#include "nearly/recognizers.hpp"
#include "nearly/report.hpp"
#include "nearly/solver.hpp"

namespace nearly::cli {

enum class Subcommand { kCompute, kMatching, kLineGraph, kRecognize, kGen, kVerify, kExplore };
enum class OutputFormat { kJson, kCsv, kText };
enum class ExploreMode { kAll, kConnected, kBoth };

enum ExitStatus : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitInputError = 2,
  kExitCapabilityError = 3,
};

// Environment overrides, applied below command-line flags.
inline constexpr const char* kEnvBruteCap = "NEARLY_BRUTE_CAP";
inline constexpr const char* kEnvEnumCap = "NEARLY_ENUM_CAP";
inline constexpr const char* kEnvWorkers = "NEARLY_WORKERS";

struct RunConfig {
  Subcommand command = Subcommand::kCompute;
  std::optional<std::string> input_path;  // "-" reads standard input
  std::optional<FamilySpec> family;
  int k = 1;
  OutputFormat format = OutputFormat::kText;
  SolverLimits limits;
  int enumeration_cap = kDefaultEnumerationMaxOrder;
  int max_n = 7;
  std::optional<int> order;  // explore
  std::string theorem;
  unsigned workers = 1;
  ExploreMode explore_mode = ExploreMode::kBoth;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline std::vector<Graph> load_graphs(const RunConfig& config) {
  if (config.input_path && config.family) {
    throw InputError("give exactly one of --input or --family");
  }
  if (config.family) return {generate(*config.family)};
  if (config.input_path) return read_graphs(read_input(*config.input_path));
  throw InputError("no input: give --input <path> or --family <name> --n <int>");
}

inline nlohmann::ordered_json pair_list(const Graph& g, const std::vector<EdgeId>& ids) {
  auto arr = nlohmann::ordered_json::array();
  for (EdgeId id : ids) arr.push_back({g.edge(id).u, g.edge(id).v});
  return arr;
}

inline std::string pair_text(const Graph& g, const std::vector<EdgeId>& ids,
                             std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(g.edge(ids[i]).u) + "-" + std::to_string(g.edge(ids[i]).v);
  }
  return out;
}

inline std::string graph_label(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? emit_graph6(g) : std::string();
}

inline void emit_solve(std::ostream& out, OutputFormat format, const Graph& g,
                       const EdgeSolveResult& r, bool header) {
  const std::vector<EdgeId> none;
  const auto& witness = r.witness ? *r.witness : none;
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["graph"] = graph_label(g);
      j["n"] = g.order();
      j["m"] = g.size();
      j["k"] = r.k;
      j["value"] = r.value;
      j["feasible"] = r.feasible;
      j["witness"] = r.witness ? pair_list(g, witness) : nlohmann::ordered_json(nullptr);
      if (!r.feasible) j["convention"] = kInfeasibleConvention;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      if (header) out << "graph,n,m,k,value,feasible,witness\n";
      out << graph_label(g) << "," << g.order() << "," << g.size() << "," << r.k << ","
          << r.value << "," << (r.feasible ? "true" : "false") << ","
          << pair_text(g, witness, ";") << "\n";
      break;
    case OutputFormat::kText:
      out << "graph " << graph_label(g) << "\n"
          << "k " << r.k << "\n"
          << "value " << r.value << "\n"
          << "feasible " << (r.feasible ? "true" : "false") << "\n"
          << "witness " << (r.witness ? pair_text(g, witness, " ") : "none") << "\n";
      break;
  }
}

inline int run_compute(const RunConfig& config, std::ostream& out) {
  if (config.k < 0) throw InputError("--k must be nonnegative");
  bool header = true;
  for (const Graph& g : load_graphs(config)) {
    emit_solve(out, config.format, g, alpha_prime_k(g, config.k, config.limits), header);
    header = false;
  }
  return kExitOk;
}

inline int run_matching(const RunConfig& config, std::ostream& out) {
  bool header = true;
  for (const Graph& g : load_graphs(config)) {
    const auto m = maximum_matching(g);
    switch (config.format) {
      case OutputFormat::kJson: {
        nlohmann::ordered_json j;
        j["graph"] = graph_label(g);
        j["size"] = m.size;
        j["witness"] = pair_list(g, m.witness);
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::kCsv:
        if (header) out << "graph,size,witness\n";
        out << graph_label(g) << "," << m.size << "," << pair_text(g, m.witness, ";") << "\n";
        break;
      case OutputFormat::kText:
        out << "graph " << graph_label(g) << "\nsize " << m.size << "\nwitness "
            << (m.witness.empty() ? "none" : pair_text(g, m.witness, " ")) << "\n";
        break;
    }
    header = false;
  }
  return kExitOk;
}

inline int run_line_graph(const RunConfig& config, std::ostream& out) {
  bool header = true;
  for (const Graph& g : load_graphs(config)) {
    const auto lg = line_graph(g);
    const std::string code = emit_graph6(lg.line_graph);
    switch (config.format) {
      case OutputFormat::kJson: {
        nlohmann::ordered_json j;
        j["graph"] = graph_label(g);
        j["line_graph"] = code;
        auto map = nlohmann::ordered_json::array();
        for (const Edge& e : lg.source_edges) map.push_back({e.u, e.v});
        j["edge_map"] = map;
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::kCsv:
        if (header) out << "graph,line_graph\n";
        out << graph_label(g) << "," << code << "\n";
        break;
      case OutputFormat::kText:
        out << code << "\n";
        break;
    }
    header = false;
  }
  return kExitOk;
}

inline int run_recognize(const RunConfig& config, std::ostream& out) {
  bool header = true;
  for (const Graph& g : load_graphs(config)) {
    const bool trivial = recognize_trivial_family(g);
    const auto tag = recognize_connected_extremal(g);
    std::optional<FaithfulResult> faithful;
    if (g.order() >= 3) faithful = is_faithful(g);
    const std::vector<EdgeId> none;
    const auto& forest =
        faithful && faithful->forest_witness ? *faithful->forest_witness : none;
    switch (config.format) {
      case OutputFormat::kJson: {
        nlohmann::ordered_json j;
        j["graph"] = graph_label(g);
        j["trivial_family"] = trivial;
        j["faithful"] = faithful ? nlohmann::ordered_json(faithful->faithful)
                                 : nlohmann::ordered_json(nullptr);
        j["forest_witness"] = faithful && faithful->forest_witness
                                  ? pair_list(g, forest)
                                  : nlohmann::ordered_json(nullptr);
        j["connected_extremal"] = tag_name(tag);
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::kCsv:
        if (header) out << "graph,trivial_family,faithful,connected_extremal\n";
        out << graph_label(g) << "," << (trivial ? "true" : "false") << ","
            << (faithful ? (faithful->faithful ? "true" : "false") : "") << ","
            << tag_name(tag) << "\n";
        break;
      case OutputFormat::kText:
        out << "graph " << graph_label(g) << "\n"
            << "trivial_family " << (trivial ? "true" : "false") << "\n"
            << "faithful "
            << (faithful ? (faithful->faithful ? "true" : "false") : "undefined") << "\n"
            << "forest_witness " << (forest.empty() ? "none" : pair_text(g, forest, " "))
            << "\n"
            << "connected_extremal " << tag_name(tag) << "\n";
        break;
    }
    header = false;
  }
  return kExitOk;
}

inline int run_gen(const RunConfig& config, std::ostream& out) {
  if (!config.family) throw InputError("gen requires --family <name> --n <int>");
  const Graph g = generate(*config.family);
  switch (config.format) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["family"] = family_name(config.family->family);
      j["n"] = g.order();
      j["m"] = g.size();
      j["graph6"] = emit_graph6(g);
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "family,n,m,graph6\n"
          << family_name(config.family->family) << "," << g.order() << "," << g.size() << ","
          << emit_graph6(g) << "\n";
      break;
    case OutputFormat::kText:
      out << emit_graph6(g) << "\n";
      break;
  }
  return kExitOk;
}

inline int run_verify(const RunConfig& config, std::ostream& out) {
  if (config.theorem.empty()) throw InputError("verify requires --theorem <id>");
  const TheoremId id = parse_theorem(config.theorem);
  VerificationReport report;
  if (config.input_path) {
    const auto corpus = read_graphs(detail::read_input(*config.input_path));
    report = verify_corpus(id, corpus, config.workers);
  } else {
    report = verify_theorem(id, config.max_n, {config.enumeration_cap, config.workers});
  }
  switch (config.format) {
    case OutputFormat::kJson: out << to_json(report).dump(2) << "\n"; break;
    case OutputFormat::kCsv: out << to_csv(report); break;
    case OutputFormat::kText:
      out << "theorem " << theorem_name(report.theorem) << "\n"
          << "orders " << report.min_order << ".." << report.max_order << "\n"
          << "graphs_scanned " << report.graphs_scanned << "\n"
          << "connected_scanned " << report.connected_scanned << "\n";
      for (const auto& [n, codes] : report.equality_census) {
        out << "equality n=" << n << " count=" << codes.size() << "\n";
      }
      out << "counterexamples " << report.counterexamples.size() << "\n";
      for (const auto& c : report.counterexamples) out << "  " << c << "\n";
      out << (report.pass ? "PASS" : "FAIL") << "\n";
      break;
  }
  return report.pass ? kExitOk : kExitCounterexample;
}

inline int run_explore(const RunConfig& config, std::ostream& out) {
  if (!config.order) throw InputError("explore requires --n <int>");
  std::optional<std::vector<Graph>> corpus;
  if (config.input_path) corpus = read_graphs(detail::read_input(*config.input_path));
  std::vector<Connectivity> modes;
  if (config.explore_mode != ExploreMode::kConnected) modes.push_back(Connectivity::kAll);
  if (config.explore_mode != ExploreMode::kAll) modes.push_back(Connectivity::kConnected);
  std::vector<ExplorationRecord> records;
  for (Connectivity mode : modes) {
    records.push_back(corpus ? explore_corpus(*config.order, mode, *corpus, config.workers)
                             : explore_degree_band(*config.order, mode,
                                                   {config.enumeration_cap, config.workers}));
  }
  switch (config.format) {
    case OutputFormat::kJson: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      out << (records.size() == 1 ? arr[0] : arr).dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      bool header = true;
      for (const auto& r : records) {
        std::string csv = to_csv(r);
        out << (header ? csv : csv.substr(csv.find('\n') + 1));
        header = false;
      }
      break;
    }
    case OutputFormat::kText:
      for (const auto& r : records) {
        out << "n " << r.n << " band [" << r.band_lo << "," << r.band_hi << "] mode "
            << connectivity_name(r.mode) << "\n";
        if (r.empty_band()) {
          out << "empty band\n";
          continue;
        }
        out << "population " << r.population << "\nminimum "
            << (r.minimum ? std::to_string(*r.minimum) : std::string("none")) << "\n";
        for (const auto& w : r.witnesses) out << "  " << w << "\n";
      }
      break;
  }
  return kExitOk;
}

}  // namespace detail

inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Subcommand::kCompute: return detail::run_compute(config, out);
      case Subcommand::kMatching: return detail::run_matching(config, out);
      case Subcommand::kLineGraph: return detail::run_line_graph(config, out);
      case Subcommand::kRecognize: return detail::run_recognize(config, out);
      case Subcommand::kGen: return detail::run_gen(config, out);
      case Subcommand::kVerify: return detail::run_verify(config, out);
      case Subcommand::kExplore: return detail::run_explore(config, out);
    }
  } catch (const CapabilityError& e) {
    err << "error: capability: " << e.what() << "\n";
    return kExitCapabilityError;
  } catch (const FormatError& e) {
    err << "error: format: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: input: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

namespace detail {

template <typename T>
std::optional<T> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  long long value = 0;
  const std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw InputError(std::string(name) + " must be a positive integer, got \"" + raw + "\"");
  }
  return static_cast<T>(value);
}

}  // namespace detail

inline int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    if (auto v = detail::env_number<std::size_t>(kEnvBruteCap)) config.limits.edge_cap = *v;
    if (auto v = detail::env_number<int>(kEnvEnumCap)) config.enumeration_cap = *v;
    if (auto v = detail::env_number<unsigned>(kEnvWorkers)) config.workers = *v;
  } catch (const InputError& e) {
    err << "error: input: " << e.what() << "\n";
    return kExitInputError;
  }

  CLI::App app{"Exact 1-nearly edge independence number toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string family;
  std::string mode;
  std::optional<int> n;
  int t = 0;
  std::optional<std::string> input;
  bool connected = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "graph6 corpus or edge-list file ('-' for stdin)");
    sub->add_option("--family", family, "named family")
        ->check(CLI::IsMember({"path", "cycle", "complete", "star", "complete_bipartite",
                               "diamond", "unicyclic_star", "matching_union", "empty"}));
    sub->add_option("--n", n, "order");
    sub->add_option("--t", t, "matching_union copies / complete_bipartite first part");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--brute-cap", config.limits.edge_cap, "brute-force edge cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--enum-cap", config.enumeration_cap, "enumeration order cap")
        ->check(CLI::PositiveNumber);
  };

  struct Entry {
    const char* name;
    const char* help;
    Subcommand command;
  };
  const Entry entries[] = {
      {"compute", "alpha'_k of each input graph", Subcommand::kCompute},
      {"matching", "maximum matching of each input graph", Subcommand::kMatching},
      {"line-graph", "line graph of each input graph as graph6", Subcommand::kLineGraph},
      {"recognize", "extremal-family tags and faithful verdict", Subcommand::kRecognize},
      {"gen", "emit a named family as graph6", Subcommand::kGen},
      {"verify", "census verification of a theorem", Subcommand::kVerify},
      {"explore", "minimum alpha'_1 over the degree band 3 <= max degree <= n-2",
       Subcommand::kExplore},
  };
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    add_common(sub);
    add_input(sub);
    const Subcommand command = entry.command;
    sub->callback([&config, command] { config.command = command; });
    switch (command) {
      case Subcommand::kCompute:
        sub->add_option("--k", config.k, "target number of adjacent pairs");
        break;
      case Subcommand::kVerify:
        sub->add_option("--theorem", config.theorem,
                        "lower-general | upper-general | lower-connected | cycle-lemma");
        sub->add_option("--max-n", config.max_n, "largest order in the census")
            ->check(CLI::PositiveNumber);
        break;
      case Subcommand::kExplore:
        sub->add_flag("--connected", connected, "connected graphs only");
        sub->add_option("--mode", mode, "all | connected | both")
            ->check(CLI::IsMember({"all", "connected", "both"}));
        break;
      default:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (auto& c : what) {
      if (c == '\n') c = ' ';
    }
    err << "error: input: " << what << "\n";
    return kExitInputError;
  }

  config.format = format == "json"  ? OutputFormat::kJson
                  : format == "csv" ? OutputFormat::kCsv
                                    : OutputFormat::kText;
  config.input_path = input;
  if (config.command == Subcommand::kExplore) {
    config.order = n;
    config.explore_mode = connected || mode == "connected" ? ExploreMode::kConnected
                          : mode == "all"                  ? ExploreMode::kAll
                                                           : ExploreMode::kBoth;
    if (connected && !mode.empty() && mode != "connected") {
      err << "error: input: --connected conflicts with --mode " << mode << "\n";
      return kExitInputError;
    }
  } else if (!family.empty()) {
    if (!n && family != "diamond") {
      err << "error: input: --family requires --n\n";
      return kExitInputError;
    }
    config.family = FamilySpec{*parse_family(family), n.value_or(4), t};
  }
  return run(config, out, err);
}

}  // namespace nearly::cli

#endif  // NEARLY_CLI_HPP
