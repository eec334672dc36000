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

#include "nonsep/generate.hpp"

#include <stdexcept>

#include "nonsep/rng.hpp"

namespace nonsep {

Graph gen_random(int n, int kappa_min, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be positive");
  if (kappa_min < 0 || kappa_min > n - 1)
    throw std::invalid_argument("gen_random: kappa_min must lie in [0, n-1]");
  Graph g = Graph::complete(n);
  Rng rng(seed);
  std::vector<Edge> order = g.edges();
  rng.shuffle(order);
  const int max_edges = n * (n - 1) / 2;
  const int min_edges = (n * kappa_min + 1) / 2;
  // Density schedule: a uniform target in the sparsest third above the
  // degree floor, so instances sit near the connectivity threshold.
  const int span = (max_edges - min_edges) / 3;
  const int target = min_edges + static_cast<int>(rng.below(static_cast<std::uint64_t>(span) + 1));
  const VertexSet all = g.vertices();
  for (const Edge& e : order) {
    if (g.size() <= target) break;
    if (g.degree(e.u) <= kappa_min || g.degree(e.v) <= kappa_min) continue;
    g.remove_edge(e.u, e.v);
    // G - uv stays k-connected iff u and v keep k disjoint paths.
    if (kappa_min > 0 && local_connectivity(g, all, e.u, e.v, kappa_min) < kappa_min) g.add_edge(e.u, e.v);
  }
  if (vertex_connectivity(g) < kappa_min) throw std::logic_error("gen_random: connectivity floor violated");
  return g;
}

Graph gen_complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: n must be nonnegative");
  return Graph::complete(n);
}

Graph gen_circulant(int n, const std::vector<int>& jumps) {
  if (n < 1) throw std::invalid_argument("circulant: n must be positive");
  Graph g(n);
  for (int j : jumps) {
    if (j < 1 || j > n / 2) throw std::invalid_argument("circulant: jump out of range");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + j) % n);
  }
  return g;
}

Graph gen_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("multipartite: no parts");
  std::vector<int> label;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::invalid_argument("multipartite: part sizes must be positive");
    label.insert(label.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(label.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (label[static_cast<std::size_t>(u)] != label[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  return g;
}

Graph gen_family(const std::string& name, const std::vector<int>& params) {
  if (name == "complete") {
    if (params.size() != 1) throw std::invalid_argument("complete takes {n}");
    return gen_complete(params[0]);
  }
  if (name == "circulant") {
    if (params.size() < 2) throw std::invalid_argument("circulant takes {n, jumps...}");
    return gen_circulant(params[0], {params.begin() + 1, params.end()});
  }
  if (name == "multipartite") return gen_multipartite(params);
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::uint64_t labeled_count(int n) {
  if (n < 0 || n > kLabeledCap) throw std::invalid_argument("labeled enumeration is capped at 7 vertices");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (mask & (std::uint64_t{1} << bit)) g.add_edge(u, v);
  return g;
}

void enumerate_all_labeled(int n, const std::function<bool(std::uint64_t, const Graph&)>& fn) {
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (!fn(mask, graph_from_mask(n, mask))) return;
}

}  // namespace nonsep
