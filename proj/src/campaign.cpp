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

#include "nonsep/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "nonsep/dichotomy.hpp"
#include "nonsep/generate.hpp"
#include "nonsep/graph_io.hpp"
#include "nonsep/local_search.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/reduction.hpp"
#include "nonsep/rng.hpp"
#include "nonsep/verify.hpp"

namespace nonsep {

using nlohmann::json;

namespace {

struct IdRow {
  const char* id;
  Goal goal;
  int k;
  int level;
  bool local;
  int n_lo;  // default n range as offsets above the threshold
  int n_hi;
};

// Threshold formulas live in TheoremSpec::threshold().
constexpr IdRow kRows[] = {
    {"T1.3-k1", Goal::k_paths, 1, 2, true, 2, 6},
    {"T1.3-k2", Goal::k_paths, 2, 2, true, 2, 5},
    {"T1.4", Goal::cycle_edges, 1, 2, true, 2, 5},
    {"T1.5", Goal::cycle_edges, 2, 1, true, 2, 4},
    {"C2.4-i", Goal::two_feasible, 0, 0, true, 2, 5},
    {"C2.4-ii", Goal::cycle_22, 0, 0, false, 2, 5},
    {"C2.5", Goal::cycle_edges_comp, 2, 0, true, 2, 4},
    {"T2.3", Goal::dichotomy, 0, 0, false, 0, 0},
    {"T2.1", Goal::dichotomy, 0, 0, false, 0, 0},
    {"L3.1", Goal::dichotomy, 0, 0, false, 0, 0},
    {"g-m-1", Goal::cycle_edges, 1, 1, true, 2, 5},
    {"L4.1", Goal::cycle_edges, 2, 2, true, 2, 4},
};

const IdRow& row_for(const std::string& id) {
  for (const IdRow& r : kRows)
    if (id == r.id) return r;
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const IdRow& r : kRows) out.emplace_back(r.id);
    return out;
  }();
  return ids;
}

int TheoremSpec::threshold() const {
  if (id == "T1.3-k1") return 2 * m + 2 * 1 + 2;
  if (id == "T1.3-k2") return 2 * m + 2 * 2 + 2;
  if (id == "T1.4") return 2 * m + 5;
  if (id == "T1.5" || id == "C2.5") return 2 * m + 8;
  if (id == "C2.4-i") return 2 * m + 4;
  if (id == "C2.4-ii") return 2 * m + 5;
  if (id == "g-m-1") return 2 * m + 3;
  if (id == "L4.1") return 2 * m + 6;
  return 0;  // dichotomies assume no connectivity
}

int TheoremSpec::default_n_min() const { return threshold() + row_for(id).n_lo; }
int TheoremSpec::default_n_max() const { return threshold() + row_for(id).n_hi; }

TheoremSpec theorem_spec(const std::string& id, int m) {
  const IdRow& r = row_for(id);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if ((id == "T2.1" || id == "L3.1") && m != 2) throw std::invalid_argument(id + " needs m = 2");
  if ((r.goal == Goal::two_feasible || r.goal == Goal::cycle_22) && m < 1)
    throw std::invalid_argument(id + " needs m >= 1");
  TheoremSpec s;
  s.id = id;
  s.m = m;
  s.goal = r.goal;
  s.k = r.k;
  s.level = r.level;
  s.local_supported = r.local;
  return s;
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::oracle:
      return "oracle";
    case Engine::local:
      return "local";
    case Engine::both:
      return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view s) {
  for (Engine e : {Engine::oracle, Engine::local, Engine::both})
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

int pool_threads(int requested) {
  int n = requested > 0 ? requested : omp_get_max_threads();
  if (const char* env = std::getenv("NONSEP_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

json to_json(const Manifest& m) {
  json roots = {{"avoided", m.avoided}};
  if (!m.terminals.empty()) roots["terminals"] = m.terminals;
  if (!m.edges.empty()) {
    json e = json::array();
    for (const Edge& x : m.edges) e.push_back({x.u, x.v});
    roots["edges"] = e;
  }
  return {{"family", m.family}, {"n", m.n}, {"kappa_min", m.kappa_min}, {"seed", m.seed}, {"roots", roots}};
}

Graph manifest_graph(const Manifest& m) {
  if (m.family == "random") return gen_random(m.n, m.kappa_min, m.seed);
  if (m.family == "complete") return gen_complete(m.n);
  if (m.family == "circulant") {
    std::vector<int> jumps;
    for (int j = 1; j <= (m.kappa_min + 1) / 2; ++j) jumps.push_back(j);
    return gen_circulant(m.n, jumps);
  }
  throw std::invalid_argument("campaigns support the random, complete and circulant families, not '" + m.family + "'");
}

namespace {

void validate_source(const TheoremSpec& spec, const InstanceSpec& src, const CampaignOptions& opts) {
  if (spec.goal == Goal::dichotomy) throw std::invalid_argument(spec.id + " is an exhaustive sweep; use run_sweep");
  const int thr = spec.threshold();
  const int kappa = src.kappa_min < 0 ? thr : src.kappa_min;
  if (kappa < thr)
    throw std::invalid_argument(spec.id + ": connectivity floor " + std::to_string(kappa) + " is below the threshold " +
                                std::to_string(thr));
  const int lo = src.n_min < 0 ? spec.default_n_min() : src.n_min;
  const int hi = src.n_max < 0 ? std::max(lo, spec.default_n_max()) : src.n_max;
  if (lo > hi) throw std::invalid_argument("empty n range");
  if (lo <= kappa) throw std::invalid_argument("n must exceed the connectivity floor");
  if (src.count < 0) throw std::invalid_argument("negative instance count");
  if (src.family != "random" && src.family != "complete" && src.family != "circulant")
    throw std::invalid_argument("unsupported campaign family '" + src.family + "'");
  if (src.family == "circulant" && lo <= 2 * ((kappa + 1) / 2) + 1)
    throw std::invalid_argument("circulant hosts need n > 2k+1");
  if (opts.engine != Engine::oracle && !spec.local_supported)
    throw std::invalid_argument("engine '" + std::string(to_string(opts.engine)) + "' is not available for " + spec.id);
}

std::vector<Edge> pick_edges(const Graph& g, int count, Rng& rng) {
  const std::vector<Edge> all = g.edges();
  if (all.empty()) throw std::invalid_argument("host has no edges");
  if (count == 1) return {all[static_cast<std::size_t>(rng.below(all.size()))]};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Edge a = all[static_cast<std::size_t>(rng.below(all.size()))];
    const Edge b = all[static_cast<std::size_t>(rng.below(all.size()))];
    if (!a.shares_vertex(b)) return {a, b};
  }
  throw std::invalid_argument("host has no two disjoint edges");
}

}  // namespace

Manifest campaign_manifest(const TheoremSpec& spec, const InstanceSpec& src, int index) {
  const int kappa = src.kappa_min < 0 ? spec.threshold() : src.kappa_min;
  const int lo = src.n_min < 0 ? spec.default_n_min() : src.n_min;
  const int hi = src.n_max < 0 ? std::max(lo, spec.default_n_max()) : src.n_max;
  const std::uint64_t instance_seed = Rng::derive(src.seed, static_cast<std::uint64_t>(index));
  Rng pick(instance_seed);
  Manifest m;
  m.family = src.family;
  m.n = pick.uniform_int(lo, hi);
  m.kappa_min = kappa;
  m.seed = Rng::derive(instance_seed, 1);
  const Graph g = manifest_graph(m);

  Rng roots(Rng::derive(m.seed, 2));
  std::vector<int> pool;
  if (spec.goal == Goal::cycle_edges || spec.goal == Goal::cycle_edges_comp) {
    m.edges = pick_edges(g, spec.k, roots);
    for (int v = 0; v < g.order(); ++v) {
      bool on_edge = false;
      for (const Edge& e : m.edges) on_edge = on_edge || e.touches(v);
      if (!on_edge) pool.push_back(v);
    }
    for (int i : roots.sample(static_cast<int>(pool.size()), spec.m)) m.avoided.push_back(pool[static_cast<std::size_t>(i)]);
  } else {
    const std::vector<int> chosen = roots.sample(g.order(), spec.m + 2);
    m.avoided.assign(chosen.begin(), chosen.begin() + spec.m);
    m.terminals = {chosen[static_cast<std::size_t>(spec.m)], chosen[static_cast<std::size_t>(spec.m) + 1]};
  }
  std::sort(m.avoided.begin(), m.avoided.end());
  return m;
}

namespace {

struct EngineRun {
  std::string verdict;  // pass, absent, stalled, no-route, budget-exhausted
  std::optional<Certificate> cert;
  json details = json::object();
};

EngineRun from_outcome(SearchOutcome out) {
  EngineRun r;
  switch (out.status) {
    case SearchStatus::found:
      r.verdict = "pass";
      r.cert = std::move(out.certificate);
      break;
    case SearchStatus::absent:
      r.verdict = "absent";
      break;
    case SearchStatus::budget_exhausted:
      r.verdict = "budget-exhausted";
      break;
  }
  r.details["routes_examined"] = out.routes_examined;
  return r;
}

EngineRun run_oracle(const TheoremSpec& spec, const Graph& g, const Manifest& m, Budget& budget) {
  SearchOptions opts;
  opts.budget = &budget;
  const VertexSet avoided = VertexSet::from(g.order(), m.avoided);
  switch (spec.goal) {
    case Goal::k_paths:
      return from_outcome(
          find_k_paths_with_residual(g, avoided, m.terminals[0], m.terminals[1], spec.k, spec.level, opts));
    case Goal::cycle_edges:
      return from_outcome(find_cycle_with_residual(g, avoided, m.edges, {ResidualRule::level, spec.level}, opts));
    case Goal::cycle_edges_comp:
      return from_outcome(find_cycle_with_residual(g, avoided, m.edges, {ResidualRule::avoided_in_component, 1}, opts));
    case Goal::two_feasible:
      return from_outcome(find_2feasible_path(RootedGraph(g, m.avoided, m.terminals[0], m.terminals[1]), opts));
    case Goal::cycle_22:
      return from_outcome(find_22_feasible_cycle(RootedGraph(g, m.avoided, m.terminals[0], m.terminals[1]), opts));
    case Goal::dichotomy:
      break;
  }
  throw std::logic_error("no oracle for this goal");
}

// Corollary 2.5 route: contract the edge pair, find the cycle through the
// contracted terminals and lift it back.
EngineRun run_reduction(const Graph& g, const Manifest& m, Budget& budget) {
  EngineRun r;
  const EdgePairReduction red = reduction_contract_edge_pair(g, m.avoided, m.edges[0], m.edges[1]);
  SearchOptions opts;
  opts.budget = &budget;
  SearchOutcome out = find_22_feasible_cycle(red.rooted(), opts);
  r.details["reduced_order"] = red.graph.order();
  if (!out.found()) {
    r.verdict = out.status == SearchStatus::budget_exhausted ? "budget-exhausted" : "absent";
    return r;
  }
  const std::vector<int>& cyc = out.certificate->cycle;
  const std::size_t len = cyc.size();
  std::size_t at1 = 0;
  std::size_t at3 = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (cyc[i] == red.b1p) at1 = i;
    if (cyc[i] == red.b3p) at3 = i;
  }
  std::vector<int> forward;
  std::vector<int> backward;
  for (std::size_t i = at1;; i = (i + 1) % len) {
    forward.push_back(cyc[i]);
    if (i == at3) break;
  }
  for (std::size_t i = at1;; i = (i + len - 1) % len) {
    backward.push_back(cyc[i]);
    if (i == at3) break;
  }
  Certificate c;
  c.kind = CertificateKind::cycle;
  c.avoided = m.avoided;
  c.edges = m.edges;
  c.cycle = pull_back_cycle(red, {forward, backward});
  c.rule = ResidualRule::avoided_in_component;
  c.level = 1;
  c.engine = "reduction";
  c.graph_hash = graph_hash(g);
  annotate_residual(g, c);
  r.verdict = "pass";
  r.cert = std::move(c);
  return r;
}

EngineRun run_local(const TheoremSpec& spec, const Graph& g, const Manifest& m, Budget& budget) {
  if (spec.goal == Goal::cycle_edges_comp) return run_reduction(g, m, budget);
  LocalProblem p;
  p.graph = &g;
  p.avoided = VertexSet::from(g.order(), m.avoided);
  switch (spec.goal) {
    case Goal::k_paths:
    case Goal::two_feasible:
      // A two-connected residual already puts A inside one block.
      p.kind = spec.k == 2 ? RouteKind::two_paths : RouteKind::path;
      p.s = m.terminals[0];
      p.t = m.terminals[1];
      p.level = 2;
      break;
    case Goal::cycle_edges:
      p.kind = spec.k == 2 ? RouteKind::cycle_through_edges : RouteKind::cycle_through_edge;
      p.edges = m.edges;
      p.level = spec.level;
      break;
    default:
      throw std::logic_error("no local engine for this goal");
  }
  p.mode = p.level == 2 ? ResidualMode::block : ResidualMode::component;
  LocalSearchOptions opts;
  opts.budget = &budget;
  opts.record_trace = false;
  LocalSearchResult res = run_local_search(p, opts);
  EngineRun r;
  switch (res.status) {
    case LocalStatus::success:
      r.verdict = "pass";
      break;
    case LocalStatus::stalled:
      r.verdict = "stalled";
      r.details["stall"] = res.diagnostics;
      break;
    case LocalStatus::no_route:
      r.verdict = "no-route";
      break;
    case LocalStatus::budget_exhausted:
      r.verdict = "budget-exhausted";
      break;
  }
  r.cert = std::move(res.certificate);
  r.details["moves"] = res.moves;
  r.details["operation1_updates"] = res.operation1_updates;
  r.details["monotone"] = res.monotone;
  r.details["operation1_shrinking"] = res.operation1_shrinking;
  r.details["claim43_ok"] = res.claim43_ok;
  return r;
}

// Demotes a pass whose certificate does not verify.
void check(const Graph& g, EngineRun& r) {
  if (r.verdict != "pass") return;
  const Verification v = verify_certificate(g, *r.cert);
  if (!v.ok) {
    r.verdict = "verify-failed";
    r.details["verify_reason"] = v.reason;
  }
}

InstanceResult run_instance(const TheoremSpec& spec, const InstanceSpec& src, const CampaignOptions& opts, int index) {
  InstanceResult out;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.manifest = campaign_manifest(spec, src, index);
    const Graph g = manifest_graph(out.manifest);
    Budget budget = Budget::for_duration(opts.budget);
    std::optional<EngineRun> oracle;
    std::optional<EngineRun> local;
    if (opts.engine != Engine::oracle) {
      local = run_local(spec, g, out.manifest, budget);
      check(g, *local);
      out.details["local"] = local->details;
      out.details["local"]["verdict"] = local->verdict;
    }
    const bool rescue = local && local->verdict != "pass" && opts.fallback_oracle;
    if (opts.engine != Engine::local || rescue) {
      Budget fresh = Budget::for_duration(opts.budget);
      oracle = run_oracle(spec, g, out.manifest, rescue ? fresh : budget);
      check(g, *oracle);
      out.details["oracle"] = oracle->details;
      out.details["oracle"]["verdict"] = oracle->verdict;
    }
    if (opts.engine == Engine::both) {
      const bool agree = (local->verdict == "pass") == (oracle->verdict == "pass");
      out.details["agree"] = agree;
      out.verdict = !agree ? (rescue && oracle->verdict == "pass" ? "fallback" : "disagree") : oracle->verdict;
      out.pass = out.verdict == "pass" || out.verdict == "fallback";
      out.certificate = oracle->verdict == "pass" ? oracle->cert : local->cert;
    } else if (opts.engine == Engine::local) {
      if (rescue) {
        out.verdict = oracle->verdict == "pass" ? "fallback" : oracle->verdict;
        out.certificate = oracle->cert;
      } else {
        out.verdict = local->verdict;
        out.certificate = local->cert;
      }
      out.pass = out.verdict == "pass" || out.verdict == "fallback";
    } else {
      out.verdict = oracle->verdict;
      out.certificate = oracle->cert;
      out.pass = out.verdict == "pass";
    }
    if (out.certificate && !out.certificate->cycle.empty())
      out.details["induced"] = is_induced_cycle(g, out.certificate->cycle);
  } catch (const std::exception& e) {
    out.verdict = "error";
    out.pass = false;
    out.details["error"] = e.what();
  }
  out.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

CampaignReport run_campaign(const TheoremSpec& spec, const InstanceSpec& source, const CampaignOptions& opts) {
  validate_source(spec, source, opts);
  CampaignReport rep;
  rep.spec = spec;
  rep.source = source;
  rep.options = opts;
  rep.instances.resize(static_cast<std::size_t>(source.count));
  const int threads = pool_threads(opts.threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < source.count; ++i) rep.instances[static_cast<std::size_t>(i)] = run_instance(spec, source, opts, i);
  rep.pass = std::all_of(rep.instances.begin(), rep.instances.end(), [](const InstanceResult& r) { return r.pass; });
  return rep;
}

json CampaignReport::summary() const {
  std::map<std::string, int> verdicts;
  int passed = 0;
  int cycles = 0;
  int induced = 0;
  int agree = 0;
  int compared = 0;
  long long moves = 0;
  long long op1 = 0;
  bool monotone = true;
  bool shrinking = true;
  bool claim43 = true;
  long long millis = 0;
  for (const InstanceResult& r : instances) {
    ++verdicts[r.verdict];
    passed += r.pass ? 1 : 0;
    millis += r.millis;
    if (r.details.contains("induced")) {
      ++cycles;
      induced += r.details["induced"].get<bool>() ? 1 : 0;
    }
    if (r.details.contains("agree")) {
      ++compared;
      agree += r.details["agree"].get<bool>() ? 1 : 0;
    }
    if (r.details.contains("local")) {
      const json& l = r.details["local"];
      moves += l.value("moves", 0);
      op1 += l.value("operation1_updates", 0);
      monotone = monotone && l.value("monotone", true);
      shrinking = shrinking && l.value("operation1_shrinking", true);
      claim43 = claim43 && l.value("claim43_ok", true);
    }
  }
  json s = {{"count", instances.size()},
            {"passed", passed},
            {"failed", static_cast<int>(instances.size()) - passed},
            {"verdicts", verdicts},
            {"pass", pass},
            {"threshold", spec.threshold()},
            {"total_millis", millis}};
  if (cycles > 0) s["induced_cycles"] = {{"induced", induced}, {"of", cycles}};
  if (compared > 0) s["engine_agreement"] = {{"agree", agree}, {"of", compared}};
  if (options.engine != Engine::oracle)
    s["local"] = {{"moves", moves},
                  {"operation1_updates", op1},
                  {"monotone", monotone},
                  {"operation1_shrinking", shrinking},
                  {"claim43_ok", claim43}};
  return s;
}

json CampaignReport::to_json() const {
  json inst = json::array();
  json certs = json::array();
  for (const InstanceResult& r : instances) {
    json row = {{"manifest", nonsep::to_json(r.manifest)}, {"verdict", r.verdict}, {"millis", r.millis}};
    if (r.certificate) {
      row["cert_ref"] = "#/certificates/" + std::to_string(certs.size());
      json c = nonsep::to_json(*r.certificate);
      c["seed"] = r.manifest.seed;
      certs.push_back(std::move(c));
    } else {
      row["cert_ref"] = nullptr;
    }
    if (!r.details.empty()) row["details"] = r.details;
    inst.push_back(std::move(row));
  }
  json spec_json = {{"id", spec.id},
                    {"m", spec.m},
                    {"threshold", spec.threshold()},
                    {"family", source.family},
                    {"kappa_min", source.kappa_min < 0 ? spec.threshold() : source.kappa_min},
                    {"n_min", source.n_min < 0 ? spec.default_n_min() : source.n_min},
                    {"n_max", source.n_max < 0 ? std::max(spec.default_n_min(), spec.default_n_max()) : source.n_max},
                    {"seed", source.seed},
                    {"count", source.count},
                    {"engine", to_string(options.engine)},
                    {"fallback", options.fallback_oracle ? "oracle" : "none"},
                    {"budget_ms", options.budget.count()}};
  return {{"spec", spec_json}, {"instances", inst}, {"certificates", certs}, {"summary", summary()}};
}

// ---------------------------------------------------------------------------
// Exhaustive sweeps

namespace {

void for_each_subset(int n, int k, const VertexSet& banned, std::vector<int>& cur, int from,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int v = from; v < n; ++v) {
    if (banned.contains(v)) continue;
    cur.push_back(v);
    for_each_subset(n, k, banned, cur, v + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

json SweepReport::to_json() const {
  json ex = json::array();
  for (const SweepExample& e : examples)
    ex.push_back({{"n", e.n}, {"mask", e.mask}, {"graph6", emit_graph6(graph_from_mask(e.n, e.mask))},
                  {"avoided", e.avoided}, {"b1", e.b1}, {"b2", e.b2}, {"verdict", e.verdict}});
  return {{"id", id},
          {"m", m},
          {"n_min", n_min},
          {"n_max", n_max},
          {"graphs", graphs},
          {"rooted_instances", rooted},
          {"clauses", {{"first", first}, {"second", second}, {"witness", witness}}},
          {"counterexamples", counterexamples},
          {"undecided", undecided},
          {"alternative_readings", {{"strict_failures", strict_failures}, {"literal_22_failures", literal_22_failures}}},
          {"examples", ex},
          {"millis", millis},
          {"pass", pass()}};
}

SweepReport run_sweep(const std::string& id, int m, const SweepOptions& opts) {
  const TheoremSpec spec = theorem_spec(id, m);
  if (spec.goal != Goal::dichotomy) throw std::invalid_argument(id + " is not a sweep");
  const int floor_n = id == "L3.1" ? 5 : id == "T2.1" ? 4 : m + 3;
  if (opts.n_min < floor_n) throw std::invalid_argument(id + " sweeps need n >= " + std::to_string(floor_n));
  if (opts.n_max < opts.n_min) throw std::invalid_argument("empty n range");
  if (opts.n_max > kLabeledCap) throw std::invalid_argument("sweeps are limited to n <= 7");

  SweepReport rep;
  rep.id = id;
  rep.m = m;
  rep.n_min = opts.n_min;
  rep.n_max = opts.n_max;
  const auto start = std::chrono::steady_clock::now();
  const int threads = pool_threads(opts.threads);
  std::vector<SweepExample> examples;

  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    const long long total = static_cast<long long>(labeled_count(n));
    std::uint64_t rooted = 0, first = 0, second = 0, wit = 0, bad = 0, undecided = 0, strict = 0, literal = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) \
    reduction(+ : rooted, first, second, wit, bad, undecided, strict, literal)
    for (long long mask = 0; mask < total; ++mask) {
      auto g = std::make_shared<const Graph>(graph_from_mask(n, static_cast<std::uint64_t>(mask)));
      std::vector<int> cur;
      for_each_subset(n, m, VertexSet(n), cur, 0, [&](const std::vector<int>& avoided) {
        std::vector<int> pair;
        for_each_subset(n, 2, VertexSet::from(n, avoided), pair, 0, [&](const std::vector<int>& b) {
          const RootedGraph r(g, avoided, b[0], b[1]);
          DichotomyVerdict v;
          if (id == "T2.3") v = check_thm23_dichotomy(r);
          else if (id == "T2.1") v = check_seymour_dichotomy(r);
          else v = check_lemma31_dichotomy(r);
          ++rooted;
          for (const ClauseVerdict& c : v.clauses) {
            if (c.branch == ClauseBranch::first) ++first;
            if (c.branch == ClauseBranch::second) ++second;
            if (c.branch == ClauseBranch::witness) ++wit;
          }
          strict += v.strict_holds ? 0 : 1;
          literal += v.literal_22_holds ? 0 : 1;
          const bool counter = v.counterexample();
          const bool open = !counter && v.undecided();
          bad += counter ? 1 : 0;
          undecided += open ? 1 : 0;
          if (counter || open) {
#pragma omp critical(nonsep_sweep_examples)
            if (examples.size() < 4096)
              examples.push_back({n, static_cast<std::uint64_t>(mask), avoided, b[0], b[1],
                                  counter ? "counterexample" : "undecided"});
          }
        });
      });
    }
    rep.graphs += static_cast<std::uint64_t>(total);
    rep.rooted += rooted;
    rep.first += first;
    rep.second += second;
    rep.witness += wit;
    rep.counterexamples += bad;
    rep.undecided += undecided;
    rep.strict_failures += strict;
    rep.literal_22_failures += literal;
  }
  std::sort(examples.begin(), examples.end(), [](const SweepExample& a, const SweepExample& b) {
    return std::tie(a.n, a.mask, a.avoided, a.b1, a.b2) < std::tie(b.n, b.mask, b.avoided, b.b1, b.b2);
  });
  if (static_cast<int>(examples.size()) > opts.max_examples) examples.resize(static_cast<std::size_t>(opts.max_examples));
  rep.examples = std::move(examples);
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace nonsep
