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

#include "nonsep/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nonsep/flow.hpp"

namespace nonsep {

namespace {
int checked_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return n;
}
}  // namespace

Graph::Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_), VertexSet(n_)) {}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::add_edge(int u, int v) {
  if (!is_vertex(u) || !is_vertex(v))
    throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  if (!is_vertex(u) || !is_vertex(v) || !adjacent(u, v)) return false;
  adj_[static_cast<std::size_t>(u)].erase(v);
  adj_[static_cast<std::size_t>(v)].erase(u);
  --m_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = neighbors(u).next(u); v >= 0; v = neighbors(u).next(v)) out.push_back({u, v});
  return out;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out(n_);
  for (int v : s) out |= neighbors(v);
  return out - s;
}

bool Graph::check_invariants() const {
  long degree_sum = 0;
  for (int u = 0; u < n_; ++u) {
    if (neighbors(u).contains(u)) return false;
    for (int v : neighbors(u))
      if (!neighbors(v).contains(u)) return false;
    degree_sum += degree(u);
  }
  return degree_sum == 2L * m_;
}

int Path::position(int v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Path Path::closed(int x, int y) const {
  int i = position(x);
  int j = position(y);
  if (i < 0 || j < 0 || i > j) throw std::invalid_argument("subpath endpoints out of order");
  return Path{{vertices.begin() + i, vertices.begin() + j + 1}};
}

Path Path::open(int x, int y) const {
  Path p = closed(x, y);
  if (p.vertices.size() <= 2) return Path{};
  return Path{{p.vertices.begin() + 1, p.vertices.end() - 1}};
}

bool Cycle::contains_edge(const Edge& e) const {
  const std::size_t k = vertices.size();
  for (std::size_t i = 0; i < k; ++i)
    if (Edge{vertices[i], vertices[(i + 1) % k]} == e) return true;
  return false;
}

bool is_valid_path(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (!g.is_vertex(v) || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const int> vertices) {
  return vertices.size() >= 3 && is_valid_path(g, vertices) && g.adjacent(vertices.front(), vertices.back());
}

VertexSet component_of(const Graph& g, const VertexSet& within, int v) {
  VertexSet reached(g.order());
  if (!within.contains(v)) return reached;
  reached.insert(v);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    for (int x : frontier) next |= g.neighbors(x);
    next &= within;
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  for (int v = left.first(); v >= 0; v = left.first()) {
    out.push_back(component_of(g, within, v));
    left -= out.back();
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, const VertexSet& within) {
  int v = within.first();
  if (v < 0) return true;
  return component_of(g, within, v) == within;
}

BlockDecomposition block_decomposition(const Graph& g, const VertexSet& within) {
  const int n = g.order();
  BlockDecomposition result{{}, VertexSet(n)};
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> cursor(static_cast<std::size_t>(n), -1);
  std::vector<Edge> edge_stack;
  int clock = 0;

  for (int root : within) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    if (!g.neighbors(root).intersects(within)) {
      result.blocks.push_back(VertexSet(n, {root}));
      disc[static_cast<std::size_t>(root)] = clock++;
      continue;
    }
    int root_children = 0;
    std::vector<int> stack{root};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      int u = stack.back();
      auto& c = cursor[static_cast<std::size_t>(u)];
      c = g.neighbors(u).next(c);
      while (c >= 0 && !within.contains(c)) c = g.neighbors(u).next(c);
      if (c >= 0) {
        int w = c;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          parent[static_cast<std::size_t>(w)] = u;
          if (u == root) ++root_children;
          edge_stack.push_back({u, w});
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = clock++;
          stack.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)] && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
          edge_stack.push_back({u, w});
          low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      stack.pop_back();
      int p = parent[static_cast<std::size_t>(u)];
      if (p < 0) continue;
      low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
      if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)]) {
        if (p != root) result.cut_vertices.insert(p);
        VertexSet block(n);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.insert(e.u);
          block.insert(e.v);
          if (e.u == p && e.v == u) break;
        }
        result.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) result.cut_vertices.insert(root);
  }
  std::sort(result.blocks.begin(), result.blocks.end(), lex_less);
  return result;
}

BlockDecomposition block_decomposition(const Graph& g) { return block_decomposition(g, g.vertices()); }

bool is_biconnected(const Graph& g, const VertexSet& within) {
  if (within.count() < 3 || !is_connected(g, within)) return false;
  for (int v : within) {
    VertexSet rest = within;
    rest.erase(v);
    if (!is_connected(g, rest)) return false;
  }
  return true;
}

int local_connectivity(const Graph& g, const VertexSet& within, int s, int t, int cap) {
  RoutingProblem problem{within, {{s, cap}}, {{t, cap}}, cap, {}, AugmentOrder::shortest};
  return route_paths(g, problem).value;
}

int vertex_connectivity(const Graph& g, const VertexSet& within) {
  const std::vector<int> vs = within.to_vector();
  const int nv = static_cast<int>(vs.size());
  if (nv <= 1) return 0;
  int best = nv - 1;
  for (int i = 0; i < nv && i <= best; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      int s = vs[static_cast<std::size_t>(i)];
      int t = vs[static_cast<std::size_t>(j)];
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, within, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

int vertex_connectivity(const Graph& g) { return vertex_connectivity(g, g.vertices()); }

bool is_l_connected(const Graph& g, const VertexSet& within, int l) {
  if (within.count() < l + 1) return false;
  if (l <= 0) return true;
  if (l == 1) return is_connected(g, within);
  if (l == 2) return is_biconnected(g, within);
  return vertex_connectivity(g, within) >= l;
}

bool meets_residual_level(const Graph& g, const VertexSet& within, int level) {
  if (level <= 1) return !within.empty() && is_connected(g, within);
  return is_l_connected(g, within, level);
}

std::optional<std::vector<Path>> internally_disjoint_paths(const Graph& g, int s, int t, int k) {
  if (s == t) throw std::invalid_argument("internally_disjoint_paths: s == t");
  if (!g.is_vertex(s) || !g.is_vertex(t)) throw std::out_of_range("terminal outside graph");
  RoutingProblem problem{g.vertices(), {{s, k}}, {{t, k}}, k, {}, AugmentOrder::shortest};
  Routing r = route_paths(g, problem);
  if (r.value < k) return std::nullopt;
  return std::move(r.paths);
}

bool is_induced_path(const Graph& g, const Path& p) {
  if (!is_valid_path(g, p.vertices)) throw std::invalid_argument("is_induced_path: not a path");
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = i + 2; j < p.vertices.size(); ++j)
      if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
  if (kept.universe() != g.order()) throw std::invalid_argument("vertex set from another graph");
  InducedSubgraph out;
  out.to_local.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : kept) {
    out.to_local[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()));
  for (int v : kept)
    for (int w : g.neighbors(v))
      if (w > v && kept.contains(w))
        out.graph.add_edge(out.to_local[static_cast<std::size_t>(v)], out.to_local[static_cast<std::size_t>(w)]);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) throw std::invalid_argument("vertex set from another graph");
  return induced_subgraph(g, g.vertices() - removed);
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const int> removed) {
  VertexSet s(g.order());
  for (int v : removed) {
    if (!g.is_vertex(v)) throw std::out_of_range("delete_vertices: vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return delete_vertices(g, s);
}

}  // namespace nonsep
