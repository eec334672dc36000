// Copyright 2026 The nonsep Authors
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

// Command-line front end. Exit codes: 0 pass, 1 violation or stall, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "nonsep/campaign.hpp"
#include "nonsep/generate.hpp"
#include "nonsep/graph_io.hpp"
#include "nonsep/local_search.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/rng.hpp"
#include "nonsep/verify.hpp"
#include "nonsep/witness.hpp"

namespace {

using nlohmann::json;
using namespace nonsep;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Edge parse_edge(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) throw UsageError("edge '" + s + "' must look like u-v");
  try {
    return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
  } catch (const std::exception&) {
    throw UsageError("edge '" + s + "' must look like u-v");
  }
}

std::vector<Edge> parse_edges(const std::vector<std::string>& items) {
  std::vector<Edge> out;
  for (const std::string& item : items) {
    std::istringstream words(item);
    for (std::string w; words >> w;) out.push_back(parse_edge(w));
  }
  return out;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string family = "random";
  int n = 8;
  int kappa = 4;
  std::uint64_t seed = 1;
  int count = 1;
  std::vector<int> params;
  std::string format = "graph6";
  std::string id;
  int m = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  std::ostringstream text;
  if (!a.id.empty()) {
    const TheoremSpec spec = theorem_spec(a.id, a.m);
    InstanceSpec src;
    src.family = a.family;
    src.seed = a.seed;
    for (int i = 0; i < a.count; ++i) {
      const Manifest man = campaign_manifest(spec, src, i);
      json line = {{"manifest", to_json(man)}, {"graph6", emit_graph6(manifest_graph(man))}};
      text << line.dump() << '\n';
    }
    write_output(a.out, text.str());
    return kPass;
  }
  const GraphFormat fmt = a.format == "edge-list" ? GraphFormat::edge_list : GraphFormat::graph6;
  for (int i = 0; i < a.count; ++i) {
    Graph g;
    if (a.family == "random") {
      g = gen_random(a.n, a.kappa, a.count == 1 ? a.seed : Rng::derive(a.seed, static_cast<std::uint64_t>(i)));
    } else if (a.family == "complete") {
      g = gen_complete(a.n);
    } else if (a.family == "circulant") {
      g = gen_circulant(a.n, a.params);
    } else if (a.family == "multipartite") {
      g = gen_multipartite(a.params);
    } else {
      throw UsageError("unknown family '" + a.family + "'");
    }
    text << emit_graph(g, fmt);
    if (fmt == GraphFormat::edge_list && i + 1 < a.count) text << '\n';
  }
  write_output(a.out, text.str());
  return kPass;
}

// ---- find ----------------------------------------------------------------

struct FindArgs {
  std::string graph = "-";
  int paths = 0;
  bool cycle = false;
  std::vector<int> avoid;
  std::vector<int> terminals;
  std::vector<std::string> edges;
  int residual = 1;
  bool component = false;
  std::string engine = "oracle";
  long long budget_ms = 60000;
  std::string trace;
  std::string out;
};

struct FindRun {
  bool found = false;
  std::string status;
  std::optional<Certificate> cert;
};

FindRun find_oracle(const Graph& g, const FindArgs& a, const VertexSet& avoided, const std::vector<Edge>& edges,
                    Budget& budget) {
  SearchOptions opts;
  opts.budget = &budget;
  SearchOutcome out;
  if (a.paths > 0) {
    out = find_k_paths_with_residual(g, avoided, a.terminals[0], a.terminals[1], a.paths, a.residual, opts);
  } else {
    CycleRequirement req{a.component ? ResidualRule::avoided_in_component : ResidualRule::level, a.residual};
    out = find_cycle_with_residual(g, avoided, edges, req, opts);
  }
  return {out.found(), std::string(to_string(out.status)), out.certificate};
}

FindRun find_local(const Graph& g, const FindArgs& a, const VertexSet& avoided, const std::vector<Edge>& edges,
                   Budget& budget) {
  LocalProblem p;
  p.graph = &g;
  p.avoided = avoided;
  if (a.paths > 0) {
    if (a.paths > 2) throw UsageError("the local engine handles one or two paths");
    p.kind = a.paths == 1 ? RouteKind::path : RouteKind::two_paths;
    p.s = a.terminals[0];
    p.t = a.terminals[1];
  } else {
    if (edges.empty() || edges.size() > 2) throw UsageError("the local engine needs one or two required edges");
    p.kind = edges.size() == 1 ? RouteKind::cycle_through_edge : RouteKind::cycle_through_edges;
    p.edges = edges;
  }
  // Component mode already asks for a connected residual, which is stronger.
  p.level = a.component ? 1 : a.residual;
  p.mode = p.level == 2 ? ResidualMode::block : ResidualMode::component;
  std::ofstream trace;
  LocalSearchOptions opts;
  opts.budget = &budget;
  opts.record_trace = false;
  if (!a.trace.empty()) {
    trace.open(a.trace);
    if (!trace) throw UsageError("cannot write '" + a.trace + "'");
    opts.trace = &trace;
  }
  LocalSearchResult res = run_local_search(p, opts);
  if (res.status == LocalStatus::stalled) std::cerr << "stall: " << res.diagnostics.dump() << '\n';
  return {res.status == LocalStatus::success, std::string(to_string(res.status)), res.certificate};
}

int run_find(FindArgs a) {
  // --edges alone already asks for a cycle.
  if (a.paths == 0 && !a.edges.empty()) a.cycle = true;
  if ((a.paths > 0) == a.cycle) throw UsageError("give exactly one of --paths k or --cycle");
  if (a.paths > 0 && a.terminals.size() != 2) throw UsageError("--paths needs --terminals s t");
  if (a.cycle && a.edges.empty()) throw UsageError("--cycle needs --edges");
  if (a.residual != 1 && a.residual != 2) throw UsageError("--residual must be 1 or 2");
  const Engine engine = parse_engine(a.engine);
  const Graph g = parse_graph(read_input(a.graph));
  for (int v : a.avoid)
    if (!g.is_vertex(v)) throw UsageError("avoided vertex " + std::to_string(v) + " out of range");
  const VertexSet avoided = VertexSet::from(g.order(), a.avoid);
  const std::vector<Edge> edges = parse_edges(a.edges);

  std::optional<FindRun> oracle;
  std::optional<FindRun> local;
  if (engine != Engine::local) {
    Budget b = Budget::for_duration(std::chrono::milliseconds(a.budget_ms));
    oracle = find_oracle(g, a, avoided, edges, b);
  }
  if (engine != Engine::oracle) {
    Budget b = Budget::for_duration(std::chrono::milliseconds(a.budget_ms));
    local = find_local(g, a, avoided, edges, b);
  }
  if (oracle && local)
    std::cerr << "oracle: " << oracle->status << ", local: " << local->status
              << (oracle->found == local->found ? " (agree)" : " (disagree)") << '\n';
  const FindRun& shown = oracle ? *oracle : *local;
  bool ok = shown.found && (!local || local->found);
  if (shown.cert) {
    const Verification v = verify_certificate(g, *shown.cert);
    if (!v.ok) {
      std::cerr << "certificate rejected: " << v.reason << '\n';
      ok = false;
    }
    json out = to_json(*shown.cert);
    out["graph6"] = emit_graph6(g);
    write_output(a.out, out.dump(2) + "\n");
  } else {
    std::cerr << "no certificate: " << shown.status << '\n';
  }
  return ok ? kPass : kViolation;
}

// ---- check ---------------------------------------------------------------

int run_check(const std::string& cert_path, const std::string& graph_path) {
  json j;
  try {
    j = json::parse(read_input(cert_path));
  } catch (const json::parse_error& e) {
    std::cout << "invalid: malformed JSON at byte " << e.byte << '\n';
    return kViolation;
  }
  Graph g;
  if (!graph_path.empty()) {
    g = parse_graph(read_input(graph_path));
  } else if (j.is_object() && j.contains("graph6") && j["graph6"].is_string()) {
    g = parse_graph6(j["graph6"].get<std::string>());
  } else {
    throw UsageError("the certificate has no graph6 field; pass --graph");
  }
  Certificate c;
  try {
    c = certificate_from_json(j);
  } catch (const std::invalid_argument& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kViolation;
  }
  const Verification v = verify_certificate(g, c);
  if (!v.ok) {
    std::cout << "invalid: " << v.reason << '\n';
    return kViolation;
  }
  std::cout << "valid " << to_string(c.kind) << " certificate\n";
  return kPass;
}

// ---- witness -------------------------------------------------------------

struct WitnessArgs {
  std::string graph = "-";
  std::vector<int> avoid;
  std::vector<int> terminals;
  std::string bound = "thm23";
  std::string mode = "exhaustive";
  int max_parts = 4;
  int separator_cap = -1;
  long long budget_ms = 60000;
  std::string out;
};

int run_witness(const WitnessArgs& a) {
  if (a.terminals.size() != 2) throw UsageError("--terminals needs b1 b2");
  const Graph g = parse_graph(read_input(a.graph));
  const RootedGraph r(g, a.avoid, a.terminals[0], a.terminals[1]);
  Budget budget = Budget::for_duration(std::chrono::milliseconds(a.budget_ms));
  WitnessOptions opts;
  opts.mode = a.mode == "separator" ? WitnessMode::separator_guided : WitnessMode::exhaustive;
  opts.max_parts = a.max_parts;
  opts.separator_cap = a.separator_cap;
  opts.budget = &budget;
  const SearchOutcome out = a.bound == "seymour" ? find_planar_collection(r, opts)
                                                 : find_witness_collection(r, {parse_bound_name(a.bound), r.m()}, opts);
  if (!out.found()) {
    std::cerr << "no witness: " << to_string(out.status) << '\n';
    return kViolation;
  }
  json j = to_json(*out.certificate);
  j["graph6"] = emit_graph6(g);
  write_output(a.out, j.dump(2) + "\n");
  return kPass;
}

// ---- verify-theorem and sweep ---------------------------------------------

struct SweepArgs {
  std::string id = "T2.3";
  int m = 0;
  int n_min = -1;
  int n_max = -1;
  int threads = 0;
  std::string out;
};

int run_sweep_cmd(const SweepArgs& a) {
  SweepOptions so;
  so.threads = a.threads;
  const int lo = a.id == "L3.1" ? 5 : a.id == "T2.1" ? 4 : a.m + 3;
  so.n_min = a.n_min < 0 ? lo : a.n_min;
  so.n_max = a.n_max < 0 ? 6 : a.n_max;
  const SweepReport rep = run_sweep(a.id, a.m, so);
  write_output(a.out, rep.to_json().dump(2) + "\n");
  return rep.pass() ? kPass : kViolation;
}

struct CampaignArgs {
  std::string id;
  int m = 1;
  std::uint64_t seed = 1;
  int count = 10;
  std::string engine = "oracle";
  std::string fallback = "none";
  std::string family = "random";
  int n_min = -1;
  int n_max = -1;
  int kappa = -1;
  long long budget_ms = 60000;
  int threads = 0;
  std::string out;
};

int run_verify_theorem(const CampaignArgs& a) {
  const TheoremSpec spec = theorem_spec(a.id, a.m);
  if (spec.goal == Goal::dichotomy) {
    SweepArgs s;
    s.id = a.id;
    s.m = a.m;
    s.n_min = a.n_min;
    s.n_max = a.n_max;
    s.threads = a.threads;
    s.out = a.out;
    return run_sweep_cmd(s);
  }
  if (a.fallback != "none" && a.fallback != "oracle") throw UsageError("--fallback must be none or oracle");
  InstanceSpec src;
  src.family = a.family;
  src.n_min = a.n_min;
  src.n_max = a.n_max;
  src.kappa_min = a.kappa;
  src.seed = a.seed;
  src.count = a.count;
  CampaignOptions opts;
  opts.engine = parse_engine(a.engine);
  opts.fallback_oracle = a.fallback == "oracle";
  opts.budget = std::chrono::milliseconds(a.budget_ms);
  opts.threads = a.threads;
  const CampaignReport rep = run_campaign(spec, src, opts);
  write_output(a.out, rep.to_json().dump(2) + "\n");
  return rep.pass ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonsep: non-separating paths and cycles in highly connected graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit graphs or campaign instances");
  gen_cmd->add_option("--family", gen.family, "random, complete, circulant or multipartite")
      ->check(CLI::IsMember({"random", "complete", "circulant", "multipartite"}));
  gen_cmd->add_option("-n,--n", gen.n, "Number of vertices");
  gen_cmd->add_option("--kappa", gen.kappa, "Connectivity floor for random graphs");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--count", gen.count, "Number of graphs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--params", gen.params, "Circulant jumps or multipartite part sizes");
  gen_cmd->add_option("--format", gen.format, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));
  gen_cmd->add_option("--id", gen.id, "Emit campaign manifests for this theorem id");
  gen_cmd->add_option("--m", gen.m, "Number of avoided vertices (with --id)");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "One-shot search for paths or a cycle");
  find_cmd->add_option("--graph", find.graph, "Graph file (graph6 or edge list, - for stdin)");
  find_cmd->add_option("--paths", find.paths, "Number of internally disjoint paths")->check(CLI::PositiveNumber);
  find_cmd->add_flag("--cycle", find.cycle, "Search for a cycle through --edges");
  find_cmd->add_option("--avoid", find.avoid, "Avoided vertices");
  find_cmd->add_option("--terminals", find.terminals, "Path terminals s t")->expected(2);
  find_cmd->add_option("--edges", find.edges, "Required edges, e.g. 0-1 2-3");
  find_cmd->add_option("--residual", find.residual, "Residual level: 1 connected, 2 two-connected");
  find_cmd->add_flag("--component", find.component, "Only require the avoided set inside one residual component");
  find_cmd->add_option("--engine", find.engine, "oracle, local or both")
      ->check(CLI::IsMember({"oracle", "local", "both"}));
  find_cmd->add_option("--budget-ms", find.budget_ms, "Time budget per engine");
  find_cmd->add_option("--trace", find.trace, "Local search trace file (JSON lines)");
  find_cmd->add_option("-o,--out", find.out, "Certificate file (default stdout)");

  std::string cert_path;
  std::string check_graph;
  auto* check_cmd = app.add_subcommand("check", "Verify a certificate file");
  check_cmd->add_option("certificate", cert_path, "Certificate JSON")->required();
  check_cmd->add_option("--graph", check_graph, "Graph file when the certificate carries no graph6 field");

  WitnessArgs wit;
  auto* wit_cmd = app.add_subcommand("witness", "Search for a witness collection");
  wit_cmd->add_option("--graph", wit.graph, "Graph file");
  wit_cmd->add_option("--avoid", wit.avoid, "Avoided vertices a1..am");
  wit_cmd->add_option("--terminals", wit.terminals, "Terminals b1 b2")->expected(2);
  wit_cmd->add_option("--bound", wit.bound, "thm23, lemma31, thm22 or seymour")
      ->check(CLI::IsMember({"thm23", "lemma31", "thm22", "seymour"}));
  wit_cmd->add_option("--mode", wit.mode, "exhaustive or separator")
      ->check(CLI::IsMember({"exhaustive", "separator"}));
  wit_cmd->add_option("--max-parts", wit.max_parts, "Largest collection searched");
  wit_cmd->add_option("--separator-cap", wit.separator_cap, "Largest separator in separator mode");
  wit_cmd->add_option("--budget-ms", wit.budget_ms, "Time budget");
  wit_cmd->add_option("-o,--out", wit.out, "Output file");

  CampaignArgs camp;
  auto* camp_cmd = app.add_subcommand("verify-theorem", "Run a theorem campaign (or sweep)");
  camp_cmd->add_option("--id", camp.id, "Theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  camp_cmd->add_option("--m", camp.m, "Number of avoided vertices");
  camp_cmd->add_option("--seed", camp.seed, "Campaign seed");
  camp_cmd->add_option("--count", camp.count, "Number of instances")->check(CLI::NonNegativeNumber);
  camp_cmd->add_option("--engine", camp.engine, "oracle, local or both")
      ->check(CLI::IsMember({"oracle", "local", "both"}));
  camp_cmd->add_option("--fallback", camp.fallback, "none or oracle")->check(CLI::IsMember({"none", "oracle"}));
  camp_cmd->add_option("--family", camp.family, "random, complete or circulant")
      ->check(CLI::IsMember({"random", "complete", "circulant"}));
  camp_cmd->add_option("--n-min", camp.n_min, "Smallest host");
  camp_cmd->add_option("--n-max", camp.n_max, "Largest host");
  camp_cmd->add_option("--kappa", camp.kappa, "Connectivity floor (default: the threshold)");
  camp_cmd->add_option("--budget-ms", camp.budget_ms, "Per-instance budget");
  camp_cmd->add_option("--threads", camp.threads, "Worker threads (0: all, capped by NONSEP_THREADS)");
  camp_cmd->add_option("-o,--out", camp.out, "Report file (default stdout)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive small-n dichotomy sweep");
  sweep_cmd->add_option("--id", sweep.id, "T2.3, T2.1 or L3.1")->check(CLI::IsMember({"T2.3", "T2.1", "L3.1"}));
  sweep_cmd->add_option("--m", sweep.m, "Number of avoided vertices");
  sweep_cmd->add_option("--n-min", sweep.n_min, "Smallest order");
  sweep_cmd->add_option("--n-max", sweep.n_max, "Largest order (at most 7)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");
  sweep_cmd->add_option("-o,--out", sweep.out, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*find_cmd) return run_find(find);
    if (*check_cmd) return run_check(cert_path, check_graph);
    if (*wit_cmd) return run_witness(wit);
    if (*camp_cmd) return run_verify_theorem(camp);
    if (*sweep_cmd) return run_sweep_cmd(sweep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
