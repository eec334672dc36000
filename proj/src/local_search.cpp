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

#include "nonsep/local_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonsep/enumerate.hpp"
#include "nonsep/flow.hpp"
#include "nonsep/graph_io.hpp"

namespace nonsep {

std::string_view to_string(RouteKind k) {
  switch (k) {
    case RouteKind::path:
      return "path";
    case RouteKind::two_paths:
      return "two-paths";
    case RouteKind::cycle_through_edge:
      return "cycle-through-edge";
    case RouteKind::cycle_through_edges:
      return "cycle-through-edges";
  }
  return "?";
}

std::string_view to_string(LocalStatus s) {
  switch (s) {
    case LocalStatus::success:
      return "success";
    case LocalStatus::stalled:
      return "stalled";
    case LocalStatus::no_route:
      return "no-route";
    case LocalStatus::budget_exhausted:
      return "budget-exhausted";
  }
  return "?";
}

std::strong_ordering lex_compare(const Potential& p, const Potential& q) {
  return std::lexicographical_compare_three_way(p.begin(), p.end(), q.begin(), q.end());
}

void LocalProblem::validate() const {
  if (!graph) throw std::invalid_argument("local search needs a graph");
  const Graph& g = *graph;
  if (avoided.universe() != g.order()) throw std::invalid_argument("avoided set has the wrong universe");
  if (level != 1 && level != 2) throw std::invalid_argument("residual level must be 1 or 2");
  auto terminal = [&](int v) {
    if (!g.is_vertex(v)) throw std::invalid_argument("terminal outside the graph");
    if (avoided.contains(v)) throw std::invalid_argument("terminal inside the avoided set");
  };
  switch (kind) {
    case RouteKind::path:
    case RouteKind::two_paths:
      terminal(s);
      terminal(t);
      if (s == t) throw std::invalid_argument("terminals must differ");
      break;
    case RouteKind::cycle_through_edge:
    case RouteKind::cycle_through_edges: {
      const std::size_t want = kind == RouteKind::cycle_through_edge ? 1 : 2;
      if (edges.size() != want) throw std::invalid_argument("wrong number of required edges");
      for (const Edge& e : edges) {
        terminal(e.u);
        terminal(e.v);
        if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("required edge not in graph");
      }
      if (want == 2 && edges[0] == edges[1]) throw std::invalid_argument("required edges must differ");
      break;
    }
  }
}

namespace {

bool two_edge_adjacent(const LocalProblem& p) {
  return p.kind == RouteKind::cycle_through_edges && p.edges[0].shares_vertex(p.edges[1]);
}

// x-y-v for adjacent required edges x-y and y-v.
struct Corner {
  int x, y, v;
};
Corner corner(const LocalProblem& p) {
  const Edge e1 = p.edges[0];
  const Edge e2 = p.edges[1];
  const int y = e2.touches(e1.u) ? e1.u : e1.v;
  return {e1.u == y ? e1.v : e1.u, y, e2.u == y ? e2.v : e2.u};
}

Path reversed(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

/// Route pieces inside `allowed` by minimum-cost (or other) augmentation.
std::optional<std::vector<Path>> route_within(const LocalProblem& p, const VertexSet& allowed, AugmentOrder order) {
  const Graph& g = *p.graph;
  RoutingProblem rp;
  rp.allowed = allowed;
  rp.order = order;
  switch (p.kind) {
    case RouteKind::path:
    case RouteKind::two_paths: {
      const int k = p.kind == RouteKind::path ? 1 : 2;
      rp.sources = {{p.s, k}};
      rp.sinks = {{p.t, k}};
      rp.demand = k;
      Routing r = route_paths(g, rp);
      if (r.value < k) return std::nullopt;
      return r.paths;
    }
    case RouteKind::cycle_through_edge: {
      const Edge e = p.edges[0];
      rp.sources = {{e.u, 1}};
      rp.sinks = {{e.v, 1}};
      rp.excluded_edges = {e};
      Routing r = route_paths(g, rp);
      if (r.value < 1) return std::nullopt;
      return r.paths;
    }
    case RouteKind::cycle_through_edges: {
      if (two_edge_adjacent(p)) {
        const Corner c = corner(p);
        if (!allowed.contains(c.y)) return std::nullopt;
        rp.allowed.erase(c.y);
        rp.sources = {{c.v, 1}};
        rp.sinks = {{c.x, 1}};
        Routing r = route_paths(g, rp);
        if (r.value < 1) return std::nullopt;
        return r.paths;
      }
      const Edge e1 = p.edges[0];
      const Edge e2 = p.edges[1];
      rp.sources = {{e1.u, 1}, {e1.v, 1}};
      rp.sinks = {{e2.u, 1}, {e2.v, 1}};
      rp.demand = 2;
      rp.excluded_edges = {e1, e2};
      Routing r = route_paths(g, rp);
      if (r.value < 2) return std::nullopt;
      Path from_y = r.paths[0].front() == e1.v ? r.paths[0] : r.paths[1];
      Path from_x = r.paths[0].front() == e1.v ? r.paths[1] : r.paths[0];
      return std::vector<Path>{from_y, reversed(from_x)};
    }
  }
  return std::nullopt;
}

/// Interior positions that may be released: every vertex except the fixed
/// ends of each piece.
std::vector<std::pair<int, int>> intervals_of(const Path& path) {
  std::vector<std::pair<int, int>> out;
  const int last = static_cast<int>(path.size()) - 1;
  for (int a = 1; a < last; ++a)
    for (int b = a; b < last; ++b) out.emplace_back(a, b);
  return out;
}

VertexSet interval_set(const Path& path, int a, int b, int universe) {
  VertexSet w(universe);
  for (int i = a; i <= b; ++i) w.insert(path.vertices[static_cast<std::size_t>(i)]);
  return w;
}

/// Positions of the first and last vertices of `path` adjacent to `target`.
std::pair<int, int> attachments(const Graph& g, const Path& path, const VertexSet& target) {
  int first = -1;
  int last = -1;
  for (std::size_t i = 0; i < path.size(); ++i)
    if (g.neighbors(path.vertices[i]).intersects(target)) {
      if (first < 0) first = static_cast<int>(i);
      last = static_cast<int>(i);
    }
  return {first, last};
}

}  // namespace

std::vector<int> SearchState::cycle(const LocalProblem& p) const {
  std::vector<int> out;
  switch (p.kind) {
    case RouteKind::path:
      return paths.empty() ? out : paths[0].vertices;
    case RouteKind::two_paths:
      out = paths[0].vertices;
      for (std::size_t i = paths[1].size() - 2; i >= 1; --i) out.push_back(paths[1].vertices[i]);
      return out;
    case RouteKind::cycle_through_edge:
      return paths[0].vertices;
    case RouteKind::cycle_through_edges:
      if (two_edge_adjacent(p)) {
        out.push_back(corner(p).y);
        out.insert(out.end(), paths[0].vertices.begin(), paths[0].vertices.end());
        return out;
      }
      out = paths[0].vertices;
      out.insert(out.end(), paths[1].vertices.begin(), paths[1].vertices.end());
      return out;
  }
  return out;
}

SearchState evaluate_state(const LocalProblem& p, std::vector<Path> paths) {
  const Graph& g = *p.graph;
  SearchState s;
  s.paths = std::move(paths);
  s.route = VertexSet(g.order());
  for (const Path& q : s.paths)
    for (int v : q.vertices) s.route.insert(v);
  if (two_edge_adjacent(p)) s.route.insert(corner(p).y);
  const VertexSet residual = g.vertices() - s.route;
  s.block = VertexSet(g.order());
  s.valid = true;
  if (p.mode == ResidualMode::component) {
    if (!p.avoided.empty()) {
      s.block = component_of(g, residual, p.avoided.first());
      s.valid = p.avoided.is_subset_of(s.block);
    } else {
      for (const VertexSet& c : components(g, residual))
        if (c.count() > s.block.count()) s.block = c;
    }
  } else {
    bool any = p.avoided.empty();
    for (const VertexSet& b : block_decomposition(g, residual).blocks)
      if (p.avoided.is_subset_of(b) && b.count() > s.block.count()) {
        s.block = b;
        any = true;
      }
    s.valid = any;
  }
  if (!s.valid) return s;
  s.comps = components(g, residual - s.block);
  std::stable_sort(s.comps.begin(), s.comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
  s.potential.push_back(s.block.count());
  for (const VertexSet& c : s.comps) s.potential.push_back(c.count());
  s.markers.assign(s.paths.size() == 2 ? 2 : 0, Markers{});
  if (!s.markers.empty() && s.t() > 0) init_markers(p, s);
  return s;
}

bool is_success(const LocalProblem& p, const SearchState& s) {
  if (!s.valid || s.t() != 0) return false;
  return meets_residual_level(*p.graph, p.graph->vertices() - s.route, p.level);
}

void init_markers(const LocalProblem& p, SearchState& s) {
  s.markers.assign(s.paths.size() == 2 ? 2 : 0, Markers{});
  if (s.markers.empty() || s.t() == 0) return;
  const VertexSet& bt = s.comps.back();
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    auto [first, last] = attachments(*p.graph, s.paths[i], bt);
    if (first < 0) continue;
    s.markers[i] = {s.paths[i].vertices[static_cast<std::size_t>(first)],
                    s.paths[i].vertices[static_cast<std::size_t>(last)]};
  }
}

std::optional<SearchState> init_state(const LocalProblem& p, Budget& budget) {
  p.validate();
  const Graph& g = *p.graph;
  const VertexSet allowed = g.vertices() - p.avoided;
  for (AugmentOrder order : {AugmentOrder::depth_first, AugmentOrder::min_cost}) {
    if (auto paths = route_within(p, allowed, order)) {
      SearchState s = evaluate_state(p, std::move(*paths));
      if (s.valid) return s;
    }
  }
  // Flow routes can split A; fall back to enumeration of routes.
  RouteQuery q;
  q.allowed = allowed;
  q.s = p.s;
  q.t = p.t;
  q.required = p.edges;
  switch (p.kind) {
    case RouteKind::path:
      q.shape = RouteShape::path;
      break;
    case RouteKind::two_paths:
      q.shape = RouteShape::two_paths;
      break;
    case RouteKind::cycle_through_edge:
      q.shape = RouteShape::cycle_through_edge;
      break;
    case RouteKind::cycle_through_edges:
      q.shape = RouteShape::cycle_through_edges;
      break;
  }
  std::optional<SearchState> found;
  enumerate_routes(g, q, budget, nullptr, [&](const Route& r) {
    std::vector<Path> paths;
    for (const auto& seg : r.segments) paths.push_back(Path{seg});
    SearchState s = evaluate_state(p, std::move(paths));
    if (!s.valid) return false;
    found = std::move(s);
    return true;
  });
  return found;
}

namespace {

// Terminals shared by both paths (two_paths routes) stay fixed and never
// belong to Q_1 or Q_2; two-edge cycles have disjoint paths.
VertexSet shared_ends(const SearchState& s, int universe) {
  if (s.paths.size() != 2) return VertexSet(universe);
  return s.paths[0].vertex_set(universe) & s.paths[1].vertex_set(universe);
}

}  // namespace

VertexSet operation1_q(const SearchState& s, int universe) {
  VertexSet q(universe);
  for (std::size_t i = 0; i < s.paths.size() && i < s.markers.size(); ++i) {
    const Path& path = s.paths[i];
    const Markers& m = s.markers[i];
    if (!m.present()) {
      for (int v : path.vertices) q.insert(v);
      continue;
    }
    const int pc = path.position(m.c);
    const int pd = path.position(m.d);
    for (int k = 0; k < static_cast<int>(path.size()); ++k)
      if (k < pc || k > pd) q.insert(path.vertices[static_cast<std::size_t>(k)]);
  }
  return q - shared_ends(s, universe);
}

namespace {

void check_markers(const SearchState& s) {
  for (std::size_t i = 0; i < s.markers.size(); ++i) {
    const Markers& m = s.markers[i];
    if (!m.present()) {
      if (m.d >= 0) throw std::invalid_argument("marker d set without c");
      continue;
    }
    const int pc = s.paths[i].position(m.c);
    const int pd = s.paths[i].position(m.d);
    if (pc < 0 || pd < 0) throw std::invalid_argument("marker not on its path");
    if (pc > pd) throw std::invalid_argument("markers out of order");
  }
}

/// P_i(c_i, d_i), empty while the markers are absent.
VertexSet open_interval(const SearchState& s, std::size_t i, int universe) {
  VertexSet out(universe);
  const Markers& m = s.markers[i];
  if (!m.present()) return out;
  const Path& path = s.paths[i];
  for (int k = path.position(m.c) + 1; k < path.position(m.d); ++k) out.insert(path.vertices[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace

std::optional<Operation1Update> operation1_step(const LocalProblem& p, SearchState& s) {
  if (s.paths.size() != 2 || s.markers.size() != 2) throw std::invalid_argument("Operation 1 needs two paths");
  if (s.t() == 0) throw std::invalid_argument("Operation 1 needs a component B_t");
  check_markers(s);
  const Graph& g = *p.graph;
  const int n = g.order();
  const VertexSet q_all = operation1_q(s, n);
  const VertexSet fixed = shared_ends(s, n);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    const VertexSet target = open_interval(s, j, n);
    if (target.empty()) continue;
    const Path& path = s.paths[i];
    Markers& m = s.markers[i];
    const int pc = m.present() ? path.position(m.c) : -1;
    const int pd = m.present() ? path.position(m.d) : -1;
    for (int k = 0; k < static_cast<int>(path.size()); ++k) {
      if (m.present() && k >= pc && k <= pd) continue;
      const int u = path.vertices[static_cast<std::size_t>(k)];
      if (fixed.contains(u)) continue;
      const VertexSet hit = g.neighbors(u) & target;
      if (hit.empty()) continue;
      Operation1Update up;
      up.path = static_cast<int>(i);
      up.u = u;
      up.v = hit.first();
      up.q_before = q_all.count();
      if (!m.present()) {
        m = {u, u};
      } else if (k < pc) {
        m.c = u;
      } else {
        m.d = u;
      }
      up.q_after = operation1_q(s, n).count();
      return up;
    }
  }
  return std::nullopt;
}

bool claim43_holds(const LocalProblem& p, const SearchState& s) {
  if (s.paths.size() != 2 || s.markers.size() != 2 || s.t() == 0) return true;
  const int n = p.graph->order();
  const VertexSet q = operation1_q(s, n);
  VertexSet far = open_interval(s, 0, n) | open_interval(s, 1, n) | s.comps.back();
  return !p.graph->neighborhood(q).intersects(far) && !q.intersects(far);
}

namespace {

struct Candidate {
  std::string kind;
  SearchState state;
  bool success = false;
};

std::string classify(const SearchState& s, const Graph& g, std::size_t i, int a, int b) {
  if (s.markers.size() != 2 || s.t() == 0) return "reroute";
  const Markers& m = s.markers[i];
  if (!m.present()) return "reroute";
  const Path& path = s.paths[i];
  const int pc = path.position(m.c);
  const int pd = path.position(m.d);
  if (a == pc + 1 && b == pd - 1) return "case2";
  auto [u1, u2] = attachments(g, path, s.comps.back());
  if (u1 < 0) return "reroute";
  if ((a == pc + 1 && b == u2 - 1) || (a == u1 + 1 && b == pd - 1)) return "case1";
  return "reroute";
}

}  // namespace

std::optional<Move> improve(const LocalProblem& p, const SearchState& s, Budget& budget) {
  if (is_success(p, s)) throw std::invalid_argument("improve called on a successful state");
  const Graph& g = *p.graph;
  const int n = g.order();
  std::optional<Candidate> best;
  auto offer = [&](std::string kind, std::vector<Path> paths) {
    SearchState next = evaluate_state(p, std::move(paths));
    if (!next.valid || next.route == s.route) return;
    if (lex_compare(next.potential, s.potential) != std::strong_ordering::greater) return;
    const bool success = is_success(p, next);
    if (best) {
      if (best->success && !success) return;
      if (best->success == success &&
          lex_compare(next.potential, best->state.potential) != std::strong_ordering::greater)
        return;
    }
    best = Candidate{std::move(kind), std::move(next), success};
  };

  // Chords: shortening a piece releases its inner vertices.
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const Path& path = s.paths[i];
    const int len = path.length();
    for (int a = 0; a < len; ++a)
      for (int b = a + 2; b <= len; ++b) {
        if (!g.adjacent(path.vertices[static_cast<std::size_t>(a)], path.vertices[static_cast<std::size_t>(b)]))
          continue;
        if (p.kind == RouteKind::cycle_through_edge && a == 0 && b == len) continue;
        if (budget.tick()) return std::nullopt;
        std::vector<Path> next = s.paths;
        auto& vs = next[i].vertices;
        vs.erase(vs.begin() + a + 1, vs.begin() + b);
        offer("shortcut", std::move(next));
      }
  }

  const VertexSet allowed = g.vertices() - p.avoided;
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    for (auto [a, b] : intervals_of(s.paths[i])) {
      const VertexSet w = interval_set(s.paths[i], a, b, n);
      // Reroutes through one component, smallest first.
      for (int j = s.t() - 1; j >= 0; --j) {
        if (budget.tick()) return std::nullopt;
        const VertexSet region = (s.route | s.comps[static_cast<std::size_t>(j)]) - w;
        if (auto paths = route_within(p, region, AugmentOrder::min_cost))
          offer(j == s.t() - 1 ? classify(s, g, i, a, b) : "reroute", std::move(*paths));
      }
      if (budget.tick()) return std::nullopt;
      if (auto paths = route_within(p, allowed - w, AugmentOrder::min_cost))
        offer("global-reroute", std::move(*paths));
    }
  }
  if (!best) return std::nullopt;
  return Move{best->kind, std::move(best->state)};
}

nlohmann::json describe_state(const LocalProblem& p, const SearchState& s) {
  nlohmann::json j;
  nlohmann::json paths = nlohmann::json::array();
  for (const Path& q : s.paths) paths.push_back(q.vertices);
  j["paths"] = paths;
  j["cycle"] = s.cycle(p);
  j["potential"] = s.potential;
  j["valid"] = s.valid;
  j["block"] = s.block.to_vector();
  nlohmann::json comps = nlohmann::json::array();
  for (const VertexSet& c : s.comps) comps.push_back(c.to_vector());
  j["comps"] = comps;
  nlohmann::json markers = nlohmann::json::array();
  for (const Markers& m : s.markers) markers.push_back({{"c", m.c}, {"d", m.d}});
  j["markers"] = markers;
  return j;
}

namespace {

/// For a stall: the vertices z_i of B that alone see P_i(c_i, d_i), and
/// whether markers plus those vertices cut the interval region from the rest.
nlohmann::json stall_diagnostics(const LocalProblem& p, const SearchState& s) {
  nlohmann::json j = describe_state(p, s);
  const Graph& g = *p.graph;
  const int n = g.order();
  if (s.markers.size() != 2 || s.t() == 0) return j;
  VertexSet separator(n);
  nlohmann::json zs = nlohmann::json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    const Markers& m = s.markers[i];
    if (m.present()) {
      separator.insert(m.c);
      separator.insert(m.d);
    }
    const VertexSet seen = g.neighborhood(open_interval(s, i, n)) & s.block;
    if (seen.count() <= 1) {
      const int z = seen.empty() ? s.block.first() : seen.first();
      zs.push_back(z);
      if (z >= 0) separator.insert(z);
    } else {
      zs.push_back(nullptr);
    }
  }
  j["z_i"] = zs;
  const VertexSet region = open_interval(s, 0, n) | open_interval(s, 1, n) | s.comps.back();
  const VertexSet rest = g.vertices() - separator - region;
  j["separator"] = separator.to_vector();
  j["separator_cuts"] = !g.neighborhood(region - separator).intersects(rest);
  return j;
}

Certificate success_certificate(const LocalProblem& p, const SearchState& s) {
  const Graph& g = *p.graph;
  Certificate c;
  c.avoided = p.avoided.to_vector();
  c.graph_hash = graph_hash(g);
  c.engine = "local";
  c.rule = ResidualRule::level;
  c.level = p.level;
  if (p.kind == RouteKind::path || p.kind == RouteKind::two_paths) {
    c.kind = CertificateKind::paths;
    c.terminals = {p.s, p.t};
    for (const Path& q : s.paths) c.paths.push_back(q.vertices);
  } else {
    c.kind = CertificateKind::cycle;
    c.edges = p.edges;
    c.cycle = s.cycle(p);
  }
  annotate_residual(g, c);
  return c;
}

nlohmann::json trace_record(const std::string& kind, const Potential& before, const Potential& after,
                            const std::vector<int>& cycle) {
  return {{"move_kind", kind}, {"potential_before", before}, {"potential_after", after}, {"cycle", cycle}};
}

}  // namespace

LocalSearchResult run_local_search(const LocalProblem& p, const LocalSearchOptions& opts) {
  p.validate();
  Budget local;
  Budget& budget = opts.budget ? *opts.budget : local;
  LocalSearchResult res;
  auto emit = [&](nlohmann::json rec) {
    if (opts.trace) *opts.trace << rec.dump() << '\n';
    if (opts.record_trace) res.trace.push_back(std::move(rec));
  };

  std::optional<SearchState> init = init_state(p, budget);
  if (!init) {
    res.status = budget.exhausted() ? LocalStatus::budget_exhausted : LocalStatus::no_route;
    return res;
  }
  SearchState state = std::move(*init);
  emit(trace_record("init", {}, state.potential, state.cycle(p)));
  const Graph& g = *p.graph;
  while (true) {
    if (is_success(p, state)) {
      res.status = LocalStatus::success;
      res.certificate = success_certificate(p, state);
      return res;
    }
    if (state.paths.size() == 2 && state.t() > 0) {
      init_markers(p, state);
      while (auto up = operation1_step(p, state)) {
        ++res.operation1_updates;
        if (up->q_after >= up->q_before) res.operation1_shrinking = false;
        emit({{"move_kind", "operation1"},
              {"path", up->path},
              {"u", up->u},
              {"v", up->v},
              {"q_before", up->q_before},
              {"q_after", up->q_after}});
      }
      if (is_induced_path(g, state.paths[0]) && is_induced_path(g, state.paths[1]) && !claim43_holds(p, state))
        res.claim43_ok = false;
    }
    std::optional<Move> move = improve(p, state, budget);
    if (budget.exhausted()) {
      res.status = LocalStatus::budget_exhausted;
      res.diagnostics = describe_state(p, state);
      return res;
    }
    if (!move) {
      res.status = LocalStatus::stalled;
      res.diagnostics = stall_diagnostics(p, state);
      return res;
    }
    if (lex_compare(move->next.potential, state.potential) != std::strong_ordering::greater) res.monotone = false;
    emit(trace_record(move->kind, state.potential, move->next.potential, move->next.cycle(p)));
    state = std::move(move->next);
    ++res.moves;
  }
}

LocalSearchResult run_local_search(const Graph& g, const VertexSet& avoided, Edge e1, Edge e2,
                                   const LocalSearchOptions& opts) {
  LocalProblem p;
  p.graph = &g;
  p.avoided = avoided;
  p.kind = RouteKind::cycle_through_edges;
  p.edges = {e1, e2};
  p.level = 1;
  p.mode = ResidualMode::component;
  return run_local_search(p, opts);
}

LocalSearchResult path_improvement(const Graph& g, const VertexSet& avoided, int s, int t,
                                   const LocalSearchOptions& opts) {
  LocalProblem p;
  p.graph = &g;
  p.avoided = avoided;
  p.kind = RouteKind::path;
  p.s = s;
  p.t = t;
  p.level = 2;
  p.mode = ResidualMode::block;
  return run_local_search(p, opts);
}

}  // namespace nonsep
