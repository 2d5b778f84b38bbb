// exlab: determining sets, resolving sets, and exchange-property reports for
// finite graphs.  Every command prints one JSON report on stdout; all vertex
// labels are 0-based unless --label-offset shifts the output.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "exlab/exchange.hpp"
#include "exlab/json_io.hpp"
#include "exlab/outerplanar.hpp"
#include "exlab/resolving.hpp"
#include "exlab/trees.hpp"
#include "exlab/wheels.hpp"
#include "json.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;
using namespace exlab;

struct CommonOptions {
  std::string graph_input;  // file path or "-"
  std::string family;
  std::string params;   // comma-separated integers
  std::string set;      // comma-separated vertex ids
  std::string kind = "det";
  std::string n_range;  // "a,b"
  int max_size = -1;
  int label_offset = 0;
  int count = 100;
  int samples = 500;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::uint64_t budget = kDefaultSearchBudget;
};

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      out.push_back(std::stoll(token));
    } catch (const std::exception&) {
      throw ParameterError("could not parse integer list: " + text);
    }
  }
  return out;
}

VertexSet parse_set_option(const std::string& text, int n) {
  std::vector<int> ids;
  for (long long v : parse_int_list(text)) ids.push_back(static_cast<int>(v));
  return make_vertex_set(ids, n);
}

Graph load_graph(const CommonOptions& options, json& inputs) {
  if (!options.graph_input.empty()) {
    std::string text;
    if (options.graph_input == "-") {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      text = buffer.str();
    } else {
      std::ifstream file(options.graph_input, std::ios::binary);
      if (!file) throw ParameterError("cannot open graph file: " + options.graph_input);
      std::stringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
    std::size_t first = text.find_first_not_of(" \t\r\n");
    Graph g = (first != std::string::npos && text[first] == '{')
                  ? parse_edge_list_json(text)
                  : parse_graph6(text);
    inputs["graph6"] = write_graph6(g);
    return g;
  }
  if (options.family.empty()) {
    throw ParameterError("provide either --graph or --family");
  }
  FamilySpec spec;
  spec.family = parse_family(options.family);
  spec.params = parse_int_list(options.params);
  if (options.seed_given) spec.seed = options.seed;
  Graph g = generate(spec);
  inputs["family"] = options.family;
  inputs["params"] = spec.params;
  if (spec.seed) inputs["seed"] = *spec.seed;
  if (g.vertex_count() <= 62) inputs["graph6"] = write_graph6(g);
  return g;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto values = parse_int_list(text);
  if (values.size() != 2 || values[0] > values[1]) {
    throw ParameterError("--n-range expects \"low,high\"");
  }
  return {static_cast<int>(values[0]), static_cast<int>(values[1])};
}

// ---------------------------------------------------------------------------
// subcommand payloads

json run_gen(const CommonOptions& options, json& inputs) {
  Graph g = load_graph(options, inputs);
  json result;
  result["graph6"] = write_graph6(g);
  result["n"] = g.vertex_count();
  result["edges"] = g.edge_count();
  return result;
}

json run_check(const CommonOptions& options, json& inputs) {
  Graph g = load_graph(options, inputs);
  VertexSet s = parse_set_option(options.set, g.vertex_count());
  inputs["set"] = vertex_set_to_json(s, options.label_offset);
  inputs["kind"] = options.kind;
  SetKind kind = parse_set_kind(options.kind);
  json result;
  result["kind"] = set_kind_name(kind);
  result["set"] = vertex_set_to_json(s, options.label_offset);
  if (kind == SetKind::determining) {
    AutGroup aut = automorphism_group(g);
    result["holds"] = is_determining(aut, s);
    result["minimal"] = is_minimal_determining(aut, s);
  } else {
    DistanceMatrix dist = connected_distances(g);
    result["holds"] = is_resolving(dist, s);
    result["minimal"] = is_minimal_resolving(dist, s);
  }
  return result;
}

json run_number(const CommonOptions& options, json& inputs) {
  Graph g = load_graph(options, inputs);
  inputs["kind"] = options.kind;
  SetKind kind = parse_set_kind(options.kind);
  SearchBudget budget(options.budget);
  json result;
  result["kind"] = set_kind_name(kind);
  result["value"] = kind == SetKind::determining ? determining_number(g, budget)
                                                 : metric_dimension(g, budget);
  return result;
}

json run_minimal_sets(const CommonOptions& options, json& inputs) {
  Graph g = load_graph(options, inputs);
  inputs["kind"] = options.kind;
  SetKind kind = parse_set_kind(options.kind);
  int max_size = options.max_size >= 0 ? options.max_size : g.vertex_count();
  inputs["maxSize"] = max_size;
  SearchBudget budget(options.budget);
  MinimalSetCensus census = kind == SetKind::determining
                                ? minimal_determining_sets(g, max_size, budget)
                                : minimal_resolving_sets(g, max_size, budget);
  return census_to_json(census, options.label_offset);
}

json run_exchange(const CommonOptions& options, json& inputs) {
  Graph g = load_graph(options, inputs);
  inputs["kind"] = options.kind;
  SetKind kind = parse_set_kind(options.kind);
  SearchBudget budget(options.budget);
  ExchangeReport report = exchange_property(g, kind, budget);
  return exchange_report_to_json(report, options.label_offset);
}

json run_wheel_report(const CommonOptions& options, json& inputs) {
  auto [low, high] = parse_range(options.n_range.empty() ? "7,12" : options.n_range);
  if (low < 7) throw ParameterError("wheel-report covers n >= 7");
  inputs["nRange"] = {low, high};
  json rows = json::array();
  for (int n = low; n <= high; ++n) {
    json row;
    row["n"] = n;
    VertexSet canonical = canonical_resolving_set(n);
    row["canonicalResolvingSet"] = vertex_set_to_json(canonical, options.label_offset);
    row["size"] = canonical.size();
    row["expectedSize"] = (2 * n + 2) / 5;
    row["passesGapCriteria"] = is_resolving_wheel(n, canonical);
    row["gaps"] = gap_structure_to_json(rim_gaps(n, canonical), options.label_offset);
    if (n >= 8) {
      auto [witness_set, r] = resolving_exchange_witness(n);
      row["exchangeWitness"] = {
          {"S", vertex_set_to_json(witness_set, options.label_offset)},
          {"r", r + options.label_offset}};
    } else {
      row["exchangeWitness"] = nullptr;
    }
    rows.push_back(row);
  }
  return json{{"wheels", rows}};
}

// characterization-vs-oracle comparison for one tree
void compare_tree(const Graph& tree, int samples, std::uint64_t seed, json& summary,
                  json& mismatches) {
  int n = tree.vertex_count();
  AutGroup aut = automorphism_group(tree);
  bool path = is_path_graph(tree);
  DistanceMatrix dist = all_pairs_distances(tree);

  std::vector<VertexSet> subsets;
  if (n <= 9) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if (mask & (1 << v)) s.push_back(v);
      }
      subsets.push_back(std::move(s));
    }
  } else {
    SeededRng rng(seed);
    for (int i = 0; i < samples; ++i) {
      std::uint64_t mask = rng.next() & ((std::uint64_t(1) << n) - 1);
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if (mask & (std::uint64_t(1) << v)) s.push_back(v);
      }
      subsets.push_back(std::move(s));
    }
  }

  for (const VertexSet& s : subsets) {
    bool expected = is_determining(aut, s);
    bool got = is_determining_tree(tree, s);
    summary["determiningChecks"] = summary["determiningChecks"].get<int>() + 1;
    if (expected != got) {
      summary["mismatchCount"] = summary["mismatchCount"].get<int>() + 1;
      if (mismatches.size() < 10) {
        mismatches.push_back({{"graph6", write_graph6(tree)},
                              {"set", vertex_set_to_json(s)},
                              {"check", "determining"}});
      }
    }
    if (!path) {
      bool expected_res = is_minimal_resolving(dist, s);
      bool got_res = is_minimal_resolving_tree(tree, s);
      summary["resolvingChecks"] = summary["resolvingChecks"].get<int>() + 1;
      if (expected_res != got_res) {
        summary["mismatchCount"] = summary["mismatchCount"].get<int>() + 1;
        if (mismatches.size() < 10) {
          mismatches.push_back({{"graph6", write_graph6(tree)},
                                {"set", vertex_set_to_json(s)},
                                {"check", "minimalResolving"}});
        }
      }
    }
  }
  if (!path) {
    for (SetKind kind : {SetKind::determining, SetKind::resolving}) {
      ExchangeReport report = exchange_property(tree, kind);
      summary["exchangeChecks"] = summary["exchangeChecks"].get<int>() + 1;
      if (!report.holds) {
        summary["exchangeViolations"] = summary["exchangeViolations"].get<int>() + 1;
      }
    }
  } else {
    summary["pathsSkipped"] = summary["pathsSkipped"].get<int>() + 1;
  }
}

json run_tree_report(const CommonOptions& options, json& inputs) {
  json summary = {{"determiningChecks", 0}, {"resolvingChecks", 0},
                  {"exchangeChecks", 0},    {"exchangeViolations", 0},
                  {"mismatchCount", 0},     {"pathsSkipped", 0},
                  {"trees", 0}};
  json mismatches = json::array();
  if (!options.graph_input.empty() ||
      (!options.family.empty() && options.family != "randomTree")) {
    Graph tree = load_graph(options, inputs);
    if (!is_tree(tree)) throw DomainError("tree-report: input graph is not a tree");
    summary["trees"] = 1;
    compare_tree(tree, options.samples, options.seed, summary, mismatches);
  } else {
    auto [low, high] = parse_range(options.n_range.empty() ? "5,12" : options.n_range);
    inputs["nRange"] = {low, high};
    inputs["count"] = options.count;
    inputs["seed"] = options.seed;
    auto corpus = seeded_corpus(Family::random_tree, options.count, low, high,
                                options.seed);
    summary["trees"] = static_cast<int>(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      compare_tree(corpus[i], options.samples, options.seed + 7919 * (i + 1), summary,
                   mismatches);
    }
  }
  summary["mismatches"] = mismatches;
  return summary;
}

void compare_outerplanar(const Graph& g, int samples, std::uint64_t seed,
                         json& summary, json& mismatches) {
  int n = g.vertex_count();
  AutGroup aut = automorphism_group(g);
  BlockCutTree bct = block_cut_tree(g);

  ExchangeEvidence decision = exchange_decision_outerplanar(g);
  ExchangeReport oracle = exchange_property(g, SetKind::determining);
  summary["exchangeChecks"] = summary["exchangeChecks"].get<int>() + 1;
  if (decision.holds != oracle.holds) {
    summary["mismatchCount"] = summary["mismatchCount"].get<int>() + 1;
    if (mismatches.size() < 10) {
      mismatches.push_back({{"graph6", write_graph6(g)}, {"check", "exchangeDecision"}});
    }
  }

  SeededRng rng(seed);
  for (int i = 0; i < samples; ++i) {
    std::uint64_t mask = rng.next() & ((std::uint64_t(1) << n) - 1);
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (mask & (std::uint64_t(1) << v)) s.push_back(v);
    }
    bool expected = is_determining(aut, s);
    bool got = is_determining_outerplanar(g, aut, bct, s);
    summary["determiningChecks"] = summary["determiningChecks"].get<int>() + 1;
    if (expected != got) {
      summary["mismatchCount"] = summary["mismatchCount"].get<int>() + 1;
      if (mismatches.size() < 10) {
        mismatches.push_back({{"graph6", write_graph6(g)},
                              {"set", vertex_set_to_json(s)},
                              {"check", "determining"}});
      }
    }
  }
}

json run_outerplanar_report(const CommonOptions& options, json& inputs) {
  json summary = {{"graphs", 0},
                  {"determiningChecks", 0},
                  {"exchangeChecks", 0},
                  {"mismatchCount", 0}};
  json mismatches = json::array();
  if (!options.graph_input.empty() ||
      (!options.family.empty() && options.family != "randomOuterplanar")) {
    Graph g = load_graph(options, inputs);
    summary["graphs"] = 1;
    compare_outerplanar(g, options.samples, options.seed, summary, mismatches);
    summary["decision"] =
        exchange_evidence_to_json(exchange_decision_outerplanar(g), options.label_offset);
  } else {
    auto [low, high] = parse_range(options.n_range.empty() ? "4,10" : options.n_range);
    inputs["nRange"] = {low, high};
    inputs["count"] = options.count;
    inputs["seed"] = options.seed;
    auto corpus = seeded_corpus(Family::random_outerplanar, options.count, low, high,
                                options.seed);
    summary["graphs"] = static_cast<int>(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      compare_outerplanar(corpus[i], options.samples, options.seed + 104729 * (i + 1),
                          summary, mismatches);
    }
  }
  summary["mismatches"] = mismatches;
  return summary;
}

json run_oracle_compare(const CommonOptions& options, json& inputs) {
  inputs["seed"] = options.seed;
  json suites;

  {  // kneser fixtures: the Petersen graph
    json suite = {{"checks", 0}, {"failures", 0}};
    Graph petersen = generate({Family::kneser, {5, 2}, {}});
    auto bump = [&suite](bool ok) {
      suite["checks"] = suite["checks"].get<int>() + 1;
      if (!ok) suite["failures"] = suite["failures"].get<int>() + 1;
    };
    bump(metric_dimension(petersen) == 3);
    bump(determining_number(petersen) == 3);
    bump(!exchange_property(petersen, SetKind::resolving).holds);
    bump(exchange_property(petersen, SetKind::determining).holds);
    suites["kneser"] = suite;
  }
  {  // wheels: gap criteria against the oracle
    json suite = {{"checks", 0}, {"failures", 0}};
    for (int n = 7; n <= 10; ++n) {
      Graph wheel = generate({Family::wheel, {n}, {}});
      DistanceMatrix dist = all_pairs_distances(wheel);
      int failures = 0;
      for (int mask = 0; mask < (1 << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v) {
          if (mask & (1 << v)) s.push_back(v);
        }
        if (is_resolving_wheel(n, s) != is_resolving(dist, s)) ++failures;
      }
      suite["checks"] = suite["checks"].get<int>() + (1 << n);
      suite["failures"] = suite["failures"].get<int>() + failures;
    }
    suites["wheels"] = suite;
  }
  {  // trees and outerplanar: compact corpus sweeps
    CommonOptions tree_options = options;
    tree_options.count = 40;
    tree_options.samples = 100;
    tree_options.n_range = "5,10";
    json ignored_inputs;
    json tree_summary = run_tree_report(tree_options, ignored_inputs);
    suites["trees"] = {{"checks", tree_summary["determiningChecks"].get<int>() +
                                      tree_summary["resolvingChecks"].get<int>() +
                                      tree_summary["exchangeChecks"].get<int>()},
                       {"failures", tree_summary["mismatchCount"].get<int>() +
                                        tree_summary["exchangeViolations"].get<int>()}};

    CommonOptions op_options = options;
    op_options.count = 20;
    op_options.samples = 100;
    op_options.n_range = "4,9";
    json op_summary = run_outerplanar_report(op_options, ignored_inputs);
    suites["outerplanar"] = {{"checks", op_summary["determiningChecks"].get<int>() +
                                            op_summary["exchangeChecks"].get<int>()},
                             {"failures", op_summary["mismatchCount"].get<int>()}};
  }
  int total_failures = 0;
  for (const auto& [name, suite] : suites.items()) {
    total_failures += suite["failures"].get<int>();
  }
  return json{{"suites", suites}, {"failures", total_failures}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determining/resolving set laboratory"};
  app.require_subcommand(1);

  CommonOptions options;
  if (const char* env_budget = std::getenv("EXLAB_BUDGET")) {
    try {
      options.budget = std::stoull(env_budget);
    } catch (const std::exception&) {
      options.budget = kDefaultSearchBudget;
    }
  }

  auto add_common = [&options](CLI::App* cmd) {
    cmd->add_option("--graph", options.graph_input,
                    "graph6 or edge-list JSON file, '-' for stdin");
    cmd->add_option("--family", options.family,
                    "cycle|path|complete|star|wheel|hypercube|kneser|randomTree|"
                    "randomOuterplanar");
    cmd->add_option("--params", options.params, "comma-separated family parameters");
    cmd->add_option("--seed", options.seed, "seed for randomized families/sweeps")
        ->each([&options](const std::string&) { options.seed_given = true; });
    cmd->add_option("--budget", options.budget, "search budget override");
    cmd->add_option("--label-offset", options.label_offset,
                    "add this offset to reported vertex labels (0 or 1)")
        ->check(CLI::Range(0, 1));
  };

  auto* gen = app.add_subcommand("gen", "generate a graph, emit graph6");
  add_common(gen);
  auto* check = app.add_subcommand("check", "test one set");
  add_common(check);
  check->add_option("--set", options.set, "comma-separated vertex ids");
  check->add_option("--kind", options.kind, "det|res");
  auto* number = app.add_subcommand("number", "determining number / metric dimension");
  add_common(number);
  number->add_option("--kind", options.kind, "det|res");
  auto* minimal = app.add_subcommand("minimal-sets", "census of minimal sets");
  add_common(minimal);
  minimal->add_option("--kind", options.kind, "det|res");
  minimal->add_option("--max-size", options.max_size, "census size bound");
  auto* exchange = app.add_subcommand("exchange", "exchange-property report");
  add_common(exchange);
  exchange->add_option("--kind", options.kind, "det|res");
  auto* wheel_report = app.add_subcommand("wheel-report", "canonical wheel families");
  add_common(wheel_report);
  wheel_report->add_option("--n-range", options.n_range, "low,high (default 7,12)");
  auto* tree_report = app.add_subcommand("tree-report",
                                         "tree characterizations vs the oracle");
  add_common(tree_report);
  tree_report->add_option("--n-range", options.n_range, "corpus sizes (default 5,12)");
  tree_report->add_option("--count", options.count, "corpus size (default 100)");
  tree_report->add_option("--samples", options.samples,
                          "random subsets per large graph (default 500)");
  auto* op_report = app.add_subcommand("outerplanar-report",
                                       "outerplanar criteria vs the oracle");
  add_common(op_report);
  op_report->add_option("--n-range", options.n_range, "corpus sizes (default 4,10)");
  op_report->add_option("--count", options.count, "corpus size (default 100)");
  op_report->add_option("--samples", options.samples,
                        "random subsets per graph (default 500)");
  auto* oracle = app.add_subcommand("oracle-compare", "seeded property suites");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json report = {{"error", {{"kind", "usage"}, {"message", e.what()}}},
                   {"toolVersion", kToolVersion}};
    std::cout << report.dump(2) << std::endl;
    return 1;
  }

  std::string command = app.get_subcommands().front()->get_name();
  json report;
  report["command"] = command;
  report["toolVersion"] = kToolVersion;
  json inputs = json::object();

  auto started = std::chrono::steady_clock::now();
  try {
    json result;
    if (command == "gen") result = run_gen(options, inputs);
    else if (command == "check") result = run_check(options, inputs);
    else if (command == "number") result = run_number(options, inputs);
    else if (command == "minimal-sets") result = run_minimal_sets(options, inputs);
    else if (command == "exchange") result = run_exchange(options, inputs);
    else if (command == "wheel-report") result = run_wheel_report(options, inputs);
    else if (command == "tree-report") result = run_tree_report(options, inputs);
    else if (command == "outerplanar-report") result = run_outerplanar_report(options, inputs);
    else if (command == "oracle-compare") result = run_oracle_compare(options, inputs);
    report["inputs"] = inputs;
    if (options.label_offset != 0) report["labelOffset"] = options.label_offset;
    report["result"] = result;
    report["elapsedMillis"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();
    std::cout << report.dump(2) << std::endl;
    return 0;
  } catch (const BudgetError& e) {
    report["inputs"] = inputs;
    report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    std::cout << report.dump(2) << std::endl;
    return 2;
  } catch (const FormatError& e) {
    report["inputs"] = inputs;
    report["error"] = {{"kind", "format"}, {"message", e.what()}};
    std::cout << report.dump(2) << std::endl;
    return 1;
  } catch (const DomainError& e) {
    report["inputs"] = inputs;
    report["error"] = {{"kind", "domain"}, {"message", e.what()}};
    std::cout << report.dump(2) << std::endl;
    return 1;
  } catch (const Error& e) {
    report["inputs"] = inputs;
    report["error"] = {{"kind", "argument"}, {"message", e.what()}};
    std::cout << report.dump(2) << std::endl;
    return 1;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cout << report.dump(2) << std::endl;
    return 1;
  }
}
