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

#include "nonsep/verify.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "nonsep/graph_io.hpp"

namespace nonsep {
namespace {

struct Failure {
  std::string reason;
};

void require(bool cond, const std::string& reason) {
  if (!cond) throw Failure{reason};
}

void check_ids(const Graph& g, const std::vector<int>& ids, const char* what) {
  for (int v : ids) require(g.is_vertex(v), std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

VertexSet distinct_set(const Graph& g, const std::vector<int>& ids, const char* what) {
  check_ids(g, ids, what);
  VertexSet s(g.order());
  for (int v : ids) {
    require(!s.contains(v), std::string(what) + ": repeated vertex " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

bool simple_path(const Graph& g, const std::vector<int>& p) {
  if (p.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.is_vertex(p[i]) || seen.contains(p[i])) return false;
    seen.insert(p[i]);
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

bool in_one_component(const Graph& g, const VertexSet& residual, const VertexSet& a) {
  if (!a.is_subset_of(residual)) return false;
  if (a.empty()) return true;
  return a.is_subset_of(component_of(g, residual, a.first()));
}

/// A inside one block of G[residual]; blocks under the chosen convention.
bool in_one_block(const Graph& g, const VertexSet& residual, const VertexSet& a, BlockConvention conv) {
  if (!a.is_subset_of(residual)) return false;
  if (a.empty()) return true;
  for (const VertexSet& b : block_decomposition(g, residual).blocks) {
    if (!a.is_subset_of(b)) continue;
    if (conv == BlockConvention::strict && b.count() == 2) continue;
    return true;
  }
  return false;
}

void check_residual(const Graph& g, const Certificate& c, const VertexSet& used, const VertexSet& avoided) {
  const VertexSet residual = g.vertices() - used;
  switch (c.rule) {
    case ResidualRule::none:
      return;
    case ResidualRule::level:
      require(c.level == 1 || c.level == 2, "residual level must be 1 or 2");
      require(meets_residual_level(g, residual, c.level), "residual level " + std::to_string(c.level) + " not met");
      return;
    case ResidualRule::avoided_in_component:
      require(in_one_component(g, residual, avoided), "avoided vertices not in one residual component");
      return;
    case ResidualRule::avoided_in_block:
      require(in_one_block(g, residual, avoided, c.convention), "avoided vertices not in one residual block");
      return;
  }
}

void verify_paths(const Graph& g, const Certificate& c, const VertexSet& avoided) {
  require(c.terminals.size() == 2, "paths need two terminals");
  check_ids(g, c.terminals, "terminals");
  const int s = c.terminals[0];
  const int t = c.terminals[1];
  require(s != t, "terminals must differ");
  require(!c.paths.empty(), "no paths");
  if (c.kind == CertificateKind::feasible_path) require(c.paths.size() == 1, "feasible path certificate needs one path");
  VertexSet used(g.order());
  VertexSet inner(g.order());
  for (const auto& p : c.paths) {
    require(simple_path(g, p), "invalid path");
    require(p.front() == s && p.back() == t, "path has wrong endpoints");
    for (std::size_t i = 0; i < p.size(); ++i) {
      require(!avoided.contains(p[i]), "avoidance violated");
      used.insert(p[i]);
      if (i == 0 || i + 1 == p.size()) continue;
      require(!inner.contains(p[i]), "paths not internally disjoint");
      inner.insert(p[i]);
    }
  }
  // Two copies of the direct edge are the same path.
  if (c.paths.size() > 1) {
    int direct = 0;
    for (const auto& p : c.paths) direct += p.size() == 2 ? 1 : 0;
    require(direct <= 1, "paths not internally disjoint");
  }
  check_residual(g, c, used, avoided);
}

void verify_cycle(const Graph& g, const Certificate& c, const VertexSet& avoided) {
  const auto& cyc = c.cycle;
  require(cyc.size() >= 3, "cycle needs at least three vertices");
  require(simple_path(g, cyc) && g.adjacent(cyc.front(), cyc.back()), "invalid cycle");
  const VertexSet used = VertexSet::from(g.order(), cyc);
  require(!used.intersects(avoided), "avoidance violated");
  for (const Edge& e : c.edges) {
    bool found = false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (Edge{cyc[i], cyc[(i + 1) % cyc.size()]} == e) found = true;
    require(found, "required edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not on cycle");
  }
  check_ids(g, c.terminals, "terminals");
  for (int v : c.terminals) require(used.contains(v), "terminal not on cycle");
  check_residual(g, c, used, avoided);
}

long long expected_threshold_doubled(const std::string& bound, long long m, long long v) {
  if (bound == "thm23") return 2 * (m + 2) * v - m * m - 5 * m - 8;
  if (bound == "lemma31") return 8 * v - 22;
  if (bound == "thm22") return 2 * (m + 1) * v - m * m - 3 * m - 2;
  throw Failure{"bound: unknown bound '" + bound + "'"};
}

int expected_cap(const std::string& bound, int m) {
  if (bound == "thm23") return m + 2;
  if (bound == "lemma31") return 4;
  if (bound == "thm22") return m + 1;
  if (bound == "seymour") return 3;
  throw Failure{"bound: unknown bound '" + bound + "'"};
}

bool planar(int n, const std::vector<Edge>& edges) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(static_cast<std::size_t>(n));
  for (const Edge& e : edges) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

void verify_witness(const Graph& g, const Certificate& c, const VertexSet& avoided) {
  const int n = g.order();
  require(c.terminals.size() == 2, "witness needs two terminals");
  check_ids(g, c.terminals, "terminals");
  const int b1 = c.terminals[0];
  const int b2 = c.terminals[1];
  VertexSet roots = avoided;
  require(!roots.contains(b1) && !roots.contains(b2) && b1 != b2, "roots must be distinct");
  roots.insert(b1);
  roots.insert(b2);
  const int m = avoided.count();

  std::vector<VertexSet> parts;
  VertexSet covered(n);
  for (const auto& ids : c.parts) {
    const VertexSet x = distinct_set(g, ids, "part");
    require(!x.empty(), "collection: empty part");
    require(!x.intersects(roots), "collection: part meets the roots");
    require(!x.intersects(covered), "collection: parts overlap");
    parts.push_back(x);
    covered |= x;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j)
        for (int v : parts[i]) require(!g.neighbors(v).intersects(parts[j]), "collection: parts not remote");

  const int cap = expected_cap(c.bound, m);
  require(c.cap_limit == cap, "bound: wrong neighbourhood cap");
  require(c.caps.size() == parts.size(), "bound: caps do not match parts");
  std::vector<VertexSet> boundary_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    VertexSet nb(n);
    for (int v : parts[i]) nb |= g.neighbors(v);
    nb -= parts[i];
    require(nb.count() == c.caps[i], "bound: recorded |N(X)| is wrong");
    require(nb.count() <= cap, "bound: |N(X)| exceeds the cap");
    boundary_of.push_back(nb);
  }

  // Pairwise edge rule of the contraction measured by the bound.
  const VertexSet kept = g.vertices() - covered;
  const bool closed = c.bound == "thm23" || c.bound == "lemma31" || c.bound == "thm22";
  const bool restricted = c.bound == "thm23" || c.bound == "lemma31";
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  int v_count = 0;
  for (int v : kept) index[static_cast<std::size_t>(v)] = v_count++;
  std::vector<Edge> contracted;
  for (int u : kept)
    for (int v : kept) {
      if (v <= u) continue;
      bool edge = g.adjacent(u, v);
      if (!edge)
        for (const VertexSet& nb : boundary_of)
          if (nb.contains(u) && nb.contains(v)) edge = true;
      const bool ru = roots.contains(u);
      const bool rv = roots.contains(v);
      if (closed && ru && rv && !(Edge{u, v} == Edge{b1, b2})) edge = true;
      if (restricted && ru != rv && !g.adjacent(u, v)) edge = false;
      if (edge) contracted.push_back({index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]});
    }
  require(static_cast<int>(contracted.size()) == c.edges_measured, "bound: recorded edge count is wrong");

  if (c.bound == "seymour") {
    require(m == 2, "seymour witness needs two avoided vertices");
    require(c.boundary.size() == 4, "seymour witness needs a boundary of four roots");
    const std::vector<int> want = {c.avoided[0], b1, c.avoided[1], b2};
    require(c.boundary == want, "seymour boundary must be (a1, b1, a2, b2)");
    std::vector<Edge> aug = contracted;
    for (int i = 0; i < 4; ++i)
      aug.push_back({index[static_cast<std::size_t>(want[static_cast<std::size_t>(i)])],
                     index[static_cast<std::size_t>(want[static_cast<std::size_t>((i + 1) % 4)])]});
    for (int r : want) aug.push_back({index[static_cast<std::size_t>(r)], v_count});
    require(planar(v_count + 1, aug), "bound: contraction is not disc-planar");
  } else {
    const long long threshold = expected_threshold_doubled(c.bound, m, v_count);
    require(c.threshold_doubled == threshold, "bound: recorded threshold is wrong");
    require(2LL * c.edges_measured <= threshold, "bound: edge count exceeds the threshold");
  }
  require(c.pass, "bound: certificate does not claim a pass");
}

void verify_common_neighbor(const Graph& g, const Certificate& c) {
  check_ids(g, c.targets, "targets");
  check_ids(g, c.forbidden, "forbidden");
  require(g.is_vertex(c.vertex), "common neighbour out of range");
  for (int t : c.targets) require(t != c.vertex && g.adjacent(c.vertex, t), "not adjacent to every target");
  for (int f : c.forbidden) require(f != c.vertex, "common neighbour is forbidden");
}

/// X is a block of g under the convention (or empty when A is empty).
bool is_block(const Graph& g, const VertexSet& x, BlockConvention conv) {
  const int k = x.count();
  if (k == 1) return g.neighbors(x.first()).empty();
  if (k == 2) {
    if (conv == BlockConvention::strict) return false;
    const int u = x.first();
    const int v = x.next(u);
    if (!g.adjacent(u, v)) return false;
    // A bridge: no other u-v path.
    Graph h = g;
    h.remove_edge(u, v);
    return !component_of(h, h.vertices(), u).contains(v);
  }
  if (!is_biconnected(g, x)) return false;
  for (int w : g.vertices() - x) {
    VertexSet bigger = x;
    bigger.insert(w);
    if (is_biconnected(g, bigger)) return false;
  }
  return true;
}

void verify_block_pair(const Graph& g, const Certificate& c, const VertexSet& avoided) {
  require(c.parts.size() == 2, "block pair needs two blocks");
  require(c.terminals.size() == 2, "block pair needs two terminals");
  check_ids(g, c.terminals, "terminals");
  const VertexSet x = distinct_set(g, c.parts[0], "block");
  const VertexSet y = distinct_set(g, c.parts[1], "block");
  require(avoided.is_subset_of(x), "first block misses an avoided vertex");
  require(y.contains(c.terminals[0]) && y.contains(c.terminals[1]), "second block misses a terminal");
  require(!x.intersects(y), "blocks intersect");
  require((x.empty() && avoided.empty()) || is_block(g, x, c.convention), "first set is not a block");
  require(is_block(g, y, c.convention), "second set is not a block");
}

}  // namespace

Verification verify_certificate(const Graph& g, const Certificate& c) {
  try {
    if (!c.graph_hash.empty()) require(c.graph_hash == graph_hash(g), "graph hash mismatch");
    const VertexSet avoided = distinct_set(g, c.avoided, "avoided");
    switch (c.kind) {
      case CertificateKind::paths:
      case CertificateKind::feasible_path:
        verify_paths(g, c, avoided);
        break;
      case CertificateKind::cycle:
        verify_cycle(g, c, avoided);
        break;
      case CertificateKind::witness:
        verify_witness(g, c, avoided);
        break;
      case CertificateKind::common_neighbor:
        verify_common_neighbor(g, c);
        break;
      case CertificateKind::block_pair:
        verify_block_pair(g, c, avoided);
        break;
    }
  } catch (const Failure& f) {
    return {false, f.reason};
  }
  return {true, {}};
}

}  // namespace nonsep
