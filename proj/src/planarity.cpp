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

#include "nonsep/planarity.hpp"

#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace nonsep {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

bool planar_edges(int n, const std::vector<Edge>& edges) {
  if (n <= 4) return true;
  if (static_cast<long long>(edges.size()) > 3LL * n - 6) return false;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : edges) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_planar(const Graph& g) { return planar_edges(g.order(), g.edges()); }

bool is_disc_planar(const Graph& g, const std::vector<int>& boundary) {
  VertexSet seen(g.order());
  for (int v : boundary) {
    if (!g.is_vertex(v)) throw std::out_of_range("boundary vertex outside the graph");
    if (seen.contains(v)) throw std::invalid_argument("duplicate boundary vertex");
    seen.insert(v);
  }
  // Close the boundary into a cycle and add an apex joined to all of it: the
  // apex region plays the outside of the disc.
  std::vector<Edge> edges = g.edges();
  const int k = static_cast<int>(boundary.size());
  if (k >= 2) {
    for (int i = 0; i < k; ++i) {
      const int u = boundary[static_cast<std::size_t>(i)];
      const int v = boundary[static_cast<std::size_t>((i + 1) % k)];
      if (k == 2 && i == 1) break;
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  const int apex = g.order();
  for (int v : boundary) edges.push_back({v, apex});
  return planar_edges(g.order() + 1, edges);
}

}  // namespace nonsep
