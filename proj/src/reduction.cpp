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

#include "nonsep/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonsep/flow.hpp"

namespace nonsep {

RootedGraph EdgePairReduction::rooted() const { return RootedGraph(graph, avoided, b1p, b3p); }

namespace {

/// Distinct representatives u_j in N(b_j) - (A + B), by bipartite matching.
std::optional<std::array<int, 4>> private_neighbors(const Graph& g, const VertexSet& blocked,
                                                    const std::array<int, 4>& b) {
  std::array<int, 4> u{-1, -1, -1, -1};
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  auto augment = [&](auto&& self, int j, VertexSet& seen) -> bool {
    for (int w : g.neighbors(b[static_cast<std::size_t>(j)]) - blocked) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      if (owner[static_cast<std::size_t>(w)] < 0 || self(self, owner[static_cast<std::size_t>(w)], seen)) {
        owner[static_cast<std::size_t>(w)] = j;
        u[static_cast<std::size_t>(j)] = w;
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < 4; ++j) {
    VertexSet seen(g.order());
    if (!augment(augment, j, seen)) return std::nullopt;
  }
  return u;
}

}  // namespace

EdgePairReduction reduction_contract_edge_pair(const Graph& g, const std::vector<int>& avoided, Edge e1, Edge e2) {
  const int n = g.order();
  for (const Edge& e : {e1, e2}) {
    if (!g.is_vertex(e.u) || !g.is_vertex(e.v)) throw std::invalid_argument("edge outside the graph");
    if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("edge not in graph");
  }
  if (e1.shares_vertex(e2)) throw std::invalid_argument("edges must be vertex-disjoint");
  const VertexSet a = VertexSet::from(n, avoided);
  EdgePairReduction r;
  r.b = {e1.u, e1.v, e2.u, e2.v};
  VertexSet bset(n);
  for (int v : r.b) {
    if (a.contains(v)) throw std::invalid_argument("edge touches the avoided set");
    bset.insert(v);
  }
  auto u = private_neighbors(g, a | bset, r.b);
  if (!u) throw std::invalid_argument("no distinct neighbours u_1..u_4 outside A and B");
  r.u = *u;

  // Edges of b_i, b_{i+1} survive only towards common neighbours of the pair.
  const VertexSet k1 = g.neighbors(r.b[0]) & g.neighbors(r.b[1]);
  const VertexSet k3 = g.neighbors(r.b[2]) & g.neighbors(r.b[3]);

  r.to_local.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (v == r.b[1] || v == r.b[3]) continue;
    r.to_local[static_cast<std::size_t>(v)] = static_cast<int>(r.to_original.size());
    r.to_original.push_back(v);
  }
  r.b1p = r.to_local[static_cast<std::size_t>(r.b[0])];
  r.b3p = r.to_local[static_cast<std::size_t>(r.b[2])];
  r.to_local[static_cast<std::size_t>(r.b[1])] = r.b1p;
  r.to_local[static_cast<std::size_t>(r.b[3])] = r.b3p;

  r.graph = Graph(static_cast<int>(r.to_original.size()));
  for (const Edge& e : g.edges()) {
    if (e == e1 || e == e2) continue;
    const bool u_in1 = e.u == r.b[0] || e.u == r.b[1];
    const bool v_in1 = e.v == r.b[0] || e.v == r.b[1];
    const bool u_in3 = e.u == r.b[2] || e.u == r.b[3];
    const bool v_in3 = e.v == r.b[2] || e.v == r.b[3];
    if ((u_in1 && !k1.contains(e.v)) || (v_in1 && !k1.contains(e.u))) continue;
    if ((u_in3 && !k3.contains(e.v)) || (v_in3 && !k3.contains(e.u))) continue;
    const int x = r.to_local[static_cast<std::size_t>(e.u)];
    const int y = r.to_local[static_cast<std::size_t>(e.v)];
    if ((u_in1 && v_in3) || (u_in3 && v_in1)) r.cross.push_back(u_in1 ? e : Edge{e.v, e.u});
    if (x != y) r.graph.add_edge(x, y);
  }
  for (int v : avoided) r.avoided.push_back(r.to_local[static_cast<std::size_t>(v)]);
  return r;
}

std::vector<int> pull_back_cycle(const EdgePairReduction& r, const std::vector<std::vector<int>>& paths) {
  if (paths.size() != 2) throw std::invalid_argument("pull back needs two paths");
  const Graph& h = r.graph;
  VertexSet inner(h.order());
  for (const auto& p : paths) {
    if (p.size() < 2 || p.front() != r.b1p || p.back() != r.b3p || !is_valid_path(h, p))
      throw std::invalid_argument("pull back needs b1'-b3' paths of G'");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (inner.contains(p[i])) throw std::invalid_argument("paths are not internally disjoint");
      inner.insert(p[i]);
    }
  }
  const int b1 = r.b[0], b2 = r.b[1], b3 = r.b[2], b4 = r.b[3];
  auto orig = [&](int x) { return r.to_original[static_cast<std::size_t>(x)]; };

  // Inner neighbours of b1' (b3') are common neighbours of b1, b2 (b3, b4)
  // in G, since the reduction kept no other edges at the pairs.
  const std::vector<int>& q1 = paths[0].size() <= paths[1].size() ? paths[0] : paths[1];
  const std::vector<int>& q2 = paths[0].size() <= paths[1].size() ? paths[1] : paths[0];
  std::vector<int> cycle;
  if (q1.size() > 2) {
    // b1 -e1- b2 -> Q2 -> b4 -e2- b3 -> Q1 reversed -> b1.
    cycle = {b1, b2};
    for (std::size_t i = 1; i + 1 < q2.size(); ++i) cycle.push_back(orig(q2[i]));
    cycle.push_back(b4);
    cycle.push_back(b3);
    for (std::size_t i = q1.size() - 2; i >= 1; --i) cycle.push_back(orig(q1[i]));
    return cycle;
  }
  // Q1 is the edge b1'b3', standing for a kept edge b_q b_p.
  if (r.cross.empty()) throw std::logic_error("b1'b3' edge without an original cross edge");
  const Edge bridge = r.cross.front();
  const int bq = bridge.u;
  const int bp = bridge.v;
  const int bq_bar = bq == b1 ? b2 : b1;
  const int bp_bar = bp == b3 ? b4 : b3;
  cycle = {bq, bq_bar};
  for (std::size_t i = 1; i + 1 < q2.size(); ++i) cycle.push_back(orig(q2[i]));
  cycle.push_back(bp_bar);
  cycle.push_back(bp);
  return cycle;
}

}  // namespace nonsep
