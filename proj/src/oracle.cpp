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

#include "nonsep/oracle.hpp"

#include <stdexcept>

#include "nonsep/enumerate.hpp"
#include "nonsep/graph_io.hpp"

namespace nonsep {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::budget_exhausted:
      return "budget-exhausted";
  }
  return "?";
}

bool avoided_in_component(const Graph& g, const VertexSet& residual, const VertexSet& avoided) {
  if (!avoided.is_subset_of(residual)) return false;
  const int a = avoided.first();
  if (a < 0) return true;
  return avoided.is_subset_of(component_of(g, residual, a));
}

bool avoided_in_block(const Graph& g, const VertexSet& residual, const VertexSet& avoided,
                      BlockConvention convention) {
  if (!avoided.is_subset_of(residual)) return false;
  const int count = avoided.count();
  if (count == 0) return true;
  if (count == 1 && convention == BlockConvention::standard) return true;
  if (count > 1 && !avoided_in_component(g, residual, avoided)) return false;
  const VertexSet host = component_of(g, residual, avoided.first());
  for (const VertexSet& b : block_decomposition(g, host).blocks) {
    if (!avoided.is_subset_of(b)) continue;
    if (convention == BlockConvention::standard || b.count() != 2) return true;
  }
  return false;
}

std::optional<int> common_neighbor(const Graph& g, const VertexSet& targets, const VertexSet& forbidden) {
  VertexSet cand = g.vertices() - targets - forbidden;
  for (int t : targets) cand &= g.neighbors(t);
  const int v = cand.first();
  if (v < 0) return std::nullopt;
  return v;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (g.adjacent(cycle[i], cycle[j])) return false;
    }
  return true;
}

namespace {

Budget& budget_of(const SearchOptions& opts, Budget& local) { return opts.budget ? *opts.budget : local; }

/// Abandons prefixes that already split A across components of G - used.
/// Removing further vertices never reunites components, so this is exact.
RoutePrune split_prune(const Graph& g, const VertexSet& avoided) {
  if (avoided.count() < 2) return nullptr;
  return [&g, &avoided](const VertexSet& used) {
    return avoided.is_subset_of(component_of(g, g.vertices() - used, avoided.first()));
  };
}

Certificate base_certificate(const Graph& g, CertificateKind kind, const VertexSet& avoided) {
  Certificate c;
  c.kind = kind;
  c.avoided = avoided.to_vector();
  c.graph_hash = graph_hash(g);
  c.engine = "oracle";
  return c;
}

SearchStatus status_of(const EnumerationStats& stats) {
  switch (stats.end) {
    case EnumerationEnd::stopped:
      return SearchStatus::found;
    case EnumerationEnd::exhausted:
      return SearchStatus::absent;
    case EnumerationEnd::budget_exhausted:
      return SearchStatus::budget_exhausted;
  }
  return SearchStatus::absent;
}

template <typename Accept, typename Fill>
SearchOutcome search(const Graph& g, const RouteQuery& q, const VertexSet& avoided, const SearchOptions& opts,
                     Certificate proto, const Accept& accept, const Fill& fill) {
  Budget local;
  Budget& budget = budget_of(opts, local);
  RoutePrune prune = split_prune(g, avoided);
  SearchOutcome out;
  const EnumerationStats stats = enumerate_routes(g, q, budget, prune, [&](const Route& route) {
    if (!accept(g.vertices() - route.vertices)) return false;
    fill(proto, route);
    annotate_residual(g, proto);
    out.certificate = proto;
    return true;
  });
  out.status = status_of(stats);
  out.routes_examined = stats.routes;
  if (!out.found()) out.certificate.reset();
  return out;
}

void check_rooted_terminals(const Graph& g, const VertexSet& avoided, int s, int t) {
  if (!g.is_vertex(s) || !g.is_vertex(t)) throw std::out_of_range("terminal outside the graph");
  if (s == t) throw std::invalid_argument("terminals must differ");
  if (avoided.contains(s) || avoided.contains(t)) throw std::invalid_argument("terminal inside the avoided set");
}

void fill_paths(Certificate& c, const Route& r) {
  c.paths = r.segments;
  c.cycle.clear();
}

void fill_cycle(Certificate& c, const Route& r) {
  c.cycle = r.cycle;
  c.paths.clear();
}

}  // namespace

SearchOutcome find_feasible_path(const RootedGraph& r, const SearchOptions& opts) {
  const Graph& g = r.graph();
  const VertexSet& a = r.avoided_set();
  RouteQuery q{RouteShape::path, r.b1(), r.b2(), {}, g.vertices() - a};
  Certificate proto = base_certificate(g, CertificateKind::feasible_path, a);
  proto.terminals = {r.b1(), r.b2()};
  proto.rule = ResidualRule::avoided_in_component;
  return search(
      g, q, a, opts, proto, [&](const VertexSet& res) { return avoided_in_component(g, res, a); }, fill_paths);
}

SearchOutcome find_2feasible_path(const RootedGraph& r, const SearchOptions& opts) {
  const Graph& g = r.graph();
  const VertexSet& a = r.avoided_set();
  RouteQuery q{RouteShape::path, r.b1(), r.b2(), {}, g.vertices() - a};
  Certificate proto = base_certificate(g, CertificateKind::feasible_path, a);
  proto.terminals = {r.b1(), r.b2()};
  proto.rule = ResidualRule::avoided_in_block;
  proto.convention = opts.convention;
  return search(
      g, q, a, opts, proto, [&](const VertexSet& res) { return avoided_in_block(g, res, a, opts.convention); },
      fill_paths);
}

SearchOutcome check_22_feasible(const RootedGraph& r, BlockConvention convention) {
  const Graph& g = r.graph();
  const VertexSet& a = r.avoided_set();
  VertexSet terminals(g.order(), {r.b1(), r.b2()});
  std::vector<VertexSet> blocks;
  for (const VertexSet& b : block_decomposition(g).blocks)
    if (convention == BlockConvention::standard || b.count() != 2) blocks.push_back(b);
  // An empty A lies in a block vacuously.
  if (a.empty()) blocks.push_back(g.no_vertices());
  SearchOutcome out;
  for (const VertexSet& y : blocks) {
    if (!terminals.is_subset_of(y)) continue;
    for (const VertexSet& x : blocks) {
      if (!a.is_subset_of(x) || x.intersects(y)) continue;
      Certificate c = base_certificate(g, CertificateKind::block_pair, a);
      c.terminals = {r.b1(), r.b2()};
      c.parts = {x.to_vector(), y.to_vector()};
      c.convention = convention;
      out.status = SearchStatus::found;
      out.certificate = std::move(c);
      return out;
    }
  }
  out.status = SearchStatus::absent;
  return out;
}

SearchOutcome find_22_feasible_cycle(const RootedGraph& r, const SearchOptions& opts) {
  const Graph& g = r.graph();
  const VertexSet& a = r.avoided_set();
  RouteQuery q{RouteShape::two_paths, r.b1(), r.b2(), {}, g.vertices() - a};
  Certificate proto = base_certificate(g, CertificateKind::cycle, a);
  proto.terminals = {r.b1(), r.b2()};
  proto.rule = ResidualRule::avoided_in_block;
  proto.convention = opts.convention;
  return search(
      g, q, a, opts, proto, [&](const VertexSet& res) { return avoided_in_block(g, res, a, opts.convention); },
      fill_cycle);
}

SearchOutcome find_k_paths_with_residual(const Graph& g, const VertexSet& avoided, int s, int t, int k, int level,
                                         const SearchOptions& opts) {
  check_rooted_terminals(g, avoided, s, t);
  if (k != 1 && k != 2) throw std::invalid_argument("k must be 1 or 2");
  if (level != 1 && level != 2) throw std::invalid_argument("residual level must be 1 or 2");
  RouteQuery q{k == 1 ? RouteShape::path : RouteShape::two_paths, s, t, {}, g.vertices() - avoided};
  Certificate proto = base_certificate(g, CertificateKind::paths, avoided);
  proto.terminals = {s, t};
  proto.rule = ResidualRule::level;
  proto.level = level;
  return search(
      g, q, avoided, opts, proto, [&](const VertexSet& res) { return meets_residual_level(g, res, level); },
      fill_paths);
}

SearchOutcome find_cycle_with_residual(const Graph& g, const VertexSet& avoided, const std::vector<Edge>& required,
                                       CycleRequirement requirement, const SearchOptions& opts) {
  if (required.empty() || required.size() > 2) throw std::invalid_argument("one or two required edges");
  for (const Edge& e : required) {
    if (!g.is_vertex(e.u) || !g.is_vertex(e.v)) throw std::out_of_range("required edge outside the graph");
    if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("required edge not in graph");
    if (avoided.contains(e.u) || avoided.contains(e.v))
      throw std::invalid_argument("required edge touches the avoided set");
  }
  if (required.size() == 2 && required[0] == required[1]) throw std::invalid_argument("required edges must differ");
  if (requirement.rule != ResidualRule::level && requirement.rule != ResidualRule::avoided_in_component)
    throw std::invalid_argument("cycle residual rule must be level or avoided-in-component");
  if (requirement.rule == ResidualRule::level && requirement.level != 1 && requirement.level != 2)
    throw std::invalid_argument("residual level must be 1 or 2");

  RouteQuery q{required.size() == 1 ? RouteShape::cycle_through_edge : RouteShape::cycle_through_edges,
               -1,
               -1,
               required,
               g.vertices() - avoided};
  Certificate proto = base_certificate(g, CertificateKind::cycle, avoided);
  proto.edges = required;
  proto.rule = requirement.rule;
  proto.level = requirement.rule == ResidualRule::level ? requirement.level : 0;
  auto accept = [&](const VertexSet& res) {
    if (requirement.rule == ResidualRule::level) return meets_residual_level(g, res, requirement.level);
    return avoided_in_component(g, res, avoided);
  };
  return search(g, q, avoided, opts, proto, accept, fill_cycle);
}

}  // namespace nonsep
