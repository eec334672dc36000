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

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "nonsep/vertex_set.hpp"

namespace nonsep {

struct Edge {
  int u = 0;
  int v = 0;

  Edge normalized() const { return u < v ? *this : Edge{v, u}; }
  bool touches(int x) const { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
  friend bool operator==(const Edge& a, const Edge& b) {
    return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
  }
};

/// Simple undirected graph on the dense ids 0..order()-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  /// Adds uv; returns false if already present. Throws on loops or bad ids.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet no_vertices() const { return VertexSet(n_); }
  bool is_vertex(int v) const { return v >= 0 && v < n_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Union of N(v) over v in s, minus s itself.
  VertexSet neighborhood(const VertexSet& s) const;

  /// Symmetric, loopless, and the edge counter agrees with the degree sum.
  bool check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Vertex sequence of a path; P[x,y] and P(x,y) are available as views.
struct Path {
  std::vector<int> vertices;

  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int position(int v) const;
  bool contains(int v) const { return position(v) >= 0; }
  /// P[x,y]; x must precede (or equal) y.
  Path closed(int x, int y) const;
  /// P(x,y) = P[x,y] - {x,y}.
  Path open(int x, int y) const;
  VertexSet vertex_set(int universe) const { return VertexSet::from(universe, vertices); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Cyclic vertex sequence, length at least 3.
struct Cycle {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains_edge(const Edge& e) const;
  VertexSet vertex_set(int universe) const { return VertexSet::from(universe, vertices); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool is_valid_path(const Graph& g, std::span<const int> vertices);
bool is_valid_cycle(const Graph& g, std::span<const int> vertices);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
VertexSet component_of(const Graph& g, const VertexSet& within, int v);
bool is_connected(const Graph& g, const VertexSet& within);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

/// Standard block/cut-vertex decomposition: bridges are 2-vertex blocks and
/// isolated vertices singleton blocks. Blocks are sorted by member list.
BlockDecomposition block_decomposition(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g, const VertexSet& within);

/// At least 3 vertices, connected, no cut vertex.
bool is_biconnected(const Graph& g, const VertexSet& within);

/// Maximum number of internally disjoint s-t paths inside `within`, capped
/// at `cap` (a direct edge counts as one path).
int local_connectivity(const Graph& g, const VertexSet& within, int s, int t, int cap);

/// kappa; complete graphs give n-1 and graphs on at most one vertex give 0.
int vertex_connectivity(const Graph& g);
int vertex_connectivity(const Graph& g, const VertexSet& within);

/// n >= l+1 and no vertex cut of size < l.
bool is_l_connected(const Graph& g, const VertexSet& within, int l);

/// Residual level check: level 1 is nonempty and connected, level 2 is
/// 2-connected (so at least three vertices).
bool meets_residual_level(const Graph& g, const VertexSet& within, int level);

/// k paths pairwise sharing only s and t, or nullopt when fewer exist.
std::optional<std::vector<Path>> internally_disjoint_paths(const Graph& g, int s, int t, int k);

/// True when no chord joins two vertices of p. Throws if p is not a path.
bool is_induced_path(const Graph& g, const Path& p);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;
  std::vector<int> to_local;  // -1 for deleted vertices
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);
/// Throws std::out_of_range for ids outside the graph.
InducedSubgraph delete_vertices(const Graph& g, std::span<const int> removed);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept);

}  // namespace nonsep
