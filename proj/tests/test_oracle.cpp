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

#include <gtest/gtest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "nonsep/enumerate.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/rng.hpp"
#include "nonsep/verify.hpp"
#include "test_util.hpp"

namespace {

using namespace nonsep;
using bf::bit;
using bf::Mask;
using testing_util::make;

Mask path_mask(const std::vector<int>& p) {
  Mask m = 0;
  for (int v : p) m |= bit(v);
  return m;
}

// Internally disjoint pairs of s-t paths, each pair once, at most one of
// them the direct edge.
void path_pairs(const Graph& g, int s, int t, Mask within,
                const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  std::vector<std::vector<int>> all;
  bf::paths(g, s, t, within, [&](const std::vector<int>& p) { all.push_back(p); });
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Mask inner_i = path_mask(all[i]) & ~(bit(s) | bit(t));
      const Mask inner_j = path_mask(all[j]) & ~(bit(s) | bit(t));
      if ((inner_i & inner_j) == 0) fn(all[i], all[j]);
    }
}

bool bf_k_paths(const Graph& g, Mask avoided, int s, int t, int k, int level) {
  const Mask within = bf::all(g.order()) & ~avoided;
  bool found = false;
  if (k == 1) {
    bf::paths(g, s, t, within, [&](const std::vector<int>& p) {
      found = found || bf::meets_level(g, bf::all(g.order()) & ~path_mask(p), level);
    });
  } else {
    path_pairs(g, s, t, within, [&](const std::vector<int>& p, const std::vector<int>& q) {
      found = found || bf::meets_level(g, bf::all(g.order()) & ~(path_mask(p) | path_mask(q)), level);
    });
  }
  return found;
}

bool consecutive(const std::vector<int>& p, int x, int y) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if ((p[i] == x && p[i + 1] == y) || (p[i] == y && p[i + 1] == x)) return true;
  return false;
}

// Cycles through e0 (and e1): closed by e0, so e1 must be a path edge.
bool bf_cycle(const Graph& g, Mask avoided, const std::vector<Edge>& req, int rule_level, bool component_rule) {
  const Mask within = bf::all(g.order()) & ~avoided;
  Graph h = g;
  h.remove_edge(req[0].u, req[0].v);
  bool found = false;
  bf::paths(h, req[0].u, req[0].v, within, [&](const std::vector<int>& p) {
    if (found || p.size() < 3) return;
    if (req.size() == 2 && !consecutive(p, req[1].u, req[1].v)) return;
    const Mask residual = bf::all(g.order()) & ~path_mask(p);
    found = component_rule ? bf::in_one_component(g, residual, avoided) : bf::meets_level(g, residual, rule_level);
  });
  return found;
}

void expect_verifies(const Graph& g, const SearchOutcome& out) {
  ASSERT_TRUE(out.certificate.has_value());
  const Verification v = verify_certificate(g, *out.certificate);
  EXPECT_TRUE(v.ok) << v.reason;
}

TEST(CommonNeighborTest, Examples) {
  Graph star = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(common_neighbor(star, VertexSet(5, {1, 2, 3, 4}), VertexSet(5)), 0);
  EXPECT_EQ(common_neighbor(testing_util::cycle(6), VertexSet(6, {0, 3}), VertexSet(6)), std::nullopt);
  EXPECT_EQ(common_neighbor(Graph::complete(5), VertexSet(5, {0, 1, 2}), VertexSet(5, {3})), 4);
  EXPECT_EQ(common_neighbor(Graph::complete(5), VertexSet(5, {0, 1, 2}), VertexSet(5)), 3);
}

TEST(FeasiblePathTest, Examples) {
  // b1 = 0, b2 = 1, a1 = 2.
  const SearchOutcome tri = find_feasible_path(RootedGraph(Graph::complete(3), {2}, 0, 1));
  ASSERT_TRUE(tri.found());
  EXPECT_EQ(tri.certificate->paths, (std::vector<std::vector<int>>{{0, 1}}));
  expect_verifies(Graph::complete(3), tri);

  Graph p = make(3, {{0, 2}, {2, 1}});
  EXPECT_EQ(find_feasible_path(RootedGraph(p, {2}, 0, 1)).status, SearchStatus::absent);
  EXPECT_EQ(find_2feasible_path(RootedGraph(p, {2}, 0, 1)).status, SearchStatus::absent);

  // K_{2,3}: b1, b2 = {0, 1}; a1, a2 = 2, 3 on the other side.
  Graph k23 = make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const RootedGraph r(k23, {2, 3}, 0, 1);
  EXPECT_FALSE(bf_k_paths(k23, bit(2) | bit(3), 0, 1, 1, 1));
  EXPECT_EQ(find_feasible_path(r).status, SearchStatus::absent);
}

TEST(FeasiblePathTest, TwoFeasibleExamples) {
  const Graph k7 = Graph::complete(7);
  const SearchOutcome out = find_2feasible_path(RootedGraph(k7, {2}, 0, 1));
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.certificate->paths, (std::vector<std::vector<int>>{{0, 1}}));
  expect_verifies(k7, out);

  // C6 with A = {2, 3}, b1 = 0, b2 = 1: path 0-1 leaves the path 2-3-4-5,
  // whose block 2-3 contains A.
  const Graph c6 = testing_util::cycle(6);
  const SearchOutcome c = find_2feasible_path(RootedGraph(c6, {2, 3}, 0, 1));
  ASSERT_TRUE(c.found());
  expect_verifies(c6, c);
  // With A = {2, 4} every residual is a path and 2, 4 are never in one edge.
  EXPECT_EQ(find_2feasible_path(RootedGraph(c6, {2, 4}, 0, 1)).status, SearchStatus::absent);
  EXPECT_TRUE(find_feasible_path(RootedGraph(c6, {2, 4}, 0, 1)).found());
}

TEST(TwoTwoFeasibleTest, Examples) {
  // Triangles {0,1,2} and {3,4,5} joined by 2-3.
  Graph g = make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  const SearchOutcome out = check_22_feasible(RootedGraph(g, {0, 1}, 4, 5));
  ASSERT_TRUE(out.found());
  ASSERT_EQ(out.certificate->parts.size(), 2U);
  auto x = out.certificate->parts[0];
  auto y = out.certificate->parts[1];
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  EXPECT_EQ(x, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(y, (std::vector<int>{3, 4, 5}));
  expect_verifies(g, out);

  EXPECT_EQ(check_22_feasible(RootedGraph(Graph::complete(5), {2, 3}, 0, 1)).status, SearchStatus::absent);

  // Wheel on 5 rim vertices: one block, b1b2 a rim edge.
  EXPECT_EQ(check_22_feasible(RootedGraph(testing_util::wheel(5), {3}, 1, 2)).status, SearchStatus::absent);
}

TEST(KPathsTest, Examples) {
  const Graph k8 = Graph::complete(8);
  const SearchOutcome out = find_k_paths_with_residual(k8, VertexSet(8, {7}), 0, 1, 2, 2);
  ASSERT_TRUE(out.found());
  ASSERT_EQ(out.certificate->paths.size(), 2U);
  expect_verifies(k8, out);

  const Graph c5 = testing_util::cycle(5);
  const SearchOutcome e = find_k_paths_with_residual(c5, VertexSet(5), 0, 1, 1, 1);
  ASSERT_TRUE(e.found());
  EXPECT_EQ(e.certificate->paths, (std::vector<std::vector<int>>{{0, 1}}));

  EXPECT_THROW(find_k_paths_with_residual(c5, VertexSet(5), 0, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(find_k_paths_with_residual(c5, VertexSet(5, {1}), 0, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(find_k_paths_with_residual(c5, VertexSet(5), 0, 1, 3, 1), std::invalid_argument);
  EXPECT_THROW(find_k_paths_with_residual(c5, VertexSet(5), 0, 1, 1, 0), std::invalid_argument);
}

TEST(KPathsTest, PetersenAgainstBruteForce) {
  const Graph pg = testing_util::petersen();
  for (int s = 0; s < 10; ++s)
    for (int t = s + 1; t < 10; ++t)
      for (int level = 1; level <= 2; ++level) {
        const SearchOutcome out = find_k_paths_with_residual(pg, VertexSet(10), s, t, 1, level);
        EXPECT_EQ(out.found(), bf_k_paths(pg, 0, s, t, 1, level)) << s << "-" << t << " l=" << level;
        if (out.found()) expect_verifies(pg, out);
      }
}

TEST(KPathsTest, RandomAgainstBruteForce) {
  Rng rng(11);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const Graph g = testing_util::random_graph(n, 40 + static_cast<int>(rng.below(50)), rng.next());
    const int m = static_cast<int>(rng.below(3));
    const auto roots = rng.sample(n, m + 2);
    const int s = roots[0];
    const int t = roots[1];
    VertexSet avoided(n);
    for (int i = 2; i < m + 2; ++i) avoided.insert(roots[static_cast<std::size_t>(i)]);
    const int k = 1 + static_cast<int>(rng.below(2));
    const int level = 1 + static_cast<int>(rng.below(2));
    const SearchOutcome out = find_k_paths_with_residual(g, avoided, s, t, k, level);
    const bool expected = bf_k_paths(g, testing_util::mask_of(avoided), s, t, k, level);
    ASSERT_EQ(out.found(), expected) << "trial " << trial;
    if (out.found()) {
      ++found;
      expect_verifies(g, out);
      // A level-2 certificate also serves level 1.
      if (level == 2) {
        EXPECT_TRUE(find_k_paths_with_residual(g, avoided, s, t, k, 1).found());
        Certificate weaker = *out.certificate;
        weaker.level = 1;
        EXPECT_TRUE(verify_certificate(g, weaker).ok);
      }
    }
  }
  EXPECT_GT(found, 50);
}

TEST(RootedPathsTest, RandomAgainstBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const Graph g = testing_util::random_graph(n, 30 + static_cast<int>(rng.below(60)), rng.next());
    const int m = static_cast<int>(rng.below(3));
    const auto roots = rng.sample(n, m + 2);
    std::vector<int> avoided(roots.begin() + 2, roots.end());
    const RootedGraph r(g, avoided, roots[0], roots[1]);
    const Mask a = testing_util::mask_of(avoided);
    const Mask within = bf::all(n) & ~a;
    bool comp = false;
    bool block = false;
    bf::paths(g, roots[0], roots[1], within, [&](const std::vector<int>& p) {
      const Mask residual = bf::all(n) & ~path_mask(p);
      comp = comp || bf::in_one_component(g, residual, a);
      block = block || bf::in_one_block(g, residual, a);
    });
    const SearchOutcome f = find_feasible_path(r);
    const SearchOutcome f2 = find_2feasible_path(r);
    ASSERT_EQ(f.found(), comp) << "trial " << trial;
    ASSERT_EQ(f2.found(), block) << "trial " << trial;
    if (f.found()) expect_verifies(g, f);
    if (f2.found()) expect_verifies(g, f2);

    bool cyc = false;
    path_pairs(g, roots[0], roots[1], within, [&](const std::vector<int>& p, const std::vector<int>& q) {
      cyc = cyc || bf::in_one_block(g, bf::all(n) & ~(path_mask(p) | path_mask(q)), a);
    });
    const SearchOutcome c = find_22_feasible_cycle(r);
    ASSERT_EQ(c.found(), cyc) << "trial " << trial;
    if (c.found()) expect_verifies(g, c);

    const SearchOutcome lit = check_22_feasible(r);
    if (lit.found()) expect_verifies(g, lit);
  }
}

TEST(CycleTest, Examples) {
  const Graph k9 = Graph::complete(9);
  const SearchOutcome out =
      find_cycle_with_residual(k9, VertexSet(9, {8}), {{0, 1}, {2, 3}}, {ResidualRule::level, 1});
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.certificate->cycle.size(), 4U);
  expect_verifies(k9, out);

  const Graph c6 = testing_util::cycle(6);
  EXPECT_EQ(find_cycle_with_residual(c6, VertexSet(6), {{0, 1}, {3, 4}}, {ResidualRule::level, 1}).status,
            SearchStatus::absent);

  // Wheel: hub 0, rim 1..6. The rim triangle 1-2-0 leaves the path 3..6.
  const Graph w = testing_util::wheel(6);
  const SearchOutcome wt = find_cycle_with_residual(w, VertexSet(7), {{1, 2}}, {ResidualRule::level, 1});
  ASSERT_TRUE(wt.found());
  EXPECT_EQ(wt.certificate->cycle.size(), 3U);
  EXPECT_TRUE(bf_cycle(w, 0, {{1, 2}}, 1, false));
  EXPECT_TRUE(bf_cycle(w, 0, {{1, 2}}, 2, false) ==
              find_cycle_with_residual(w, VertexSet(7), {{1, 2}}, {ResidualRule::level, 2}).found());

  EXPECT_THROW(find_cycle_with_residual(c6, VertexSet(6, {0}), {{0, 1}}, {ResidualRule::level, 1}),
               std::invalid_argument);
  EXPECT_THROW(find_cycle_with_residual(c6, VertexSet(6), {{0, 2}}, {ResidualRule::level, 1}), std::invalid_argument);
}

TEST(CycleTest, RandomAgainstBruteForce) {
  Rng rng(13);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const Graph g = testing_util::random_graph(n, 40 + static_cast<int>(rng.below(50)), rng.next());
    const auto edges = g.edges();
    if (edges.size() < 2) continue;
    std::vector<Edge> req{edges[rng.below(edges.size())]};
    if (rng.below(2) == 0) {
      const Edge e = edges[rng.below(edges.size())];
      if (!(e == req[0])) req.push_back(e);
    }
    Mask used = 0;
    for (const Edge& e : req) used |= bit(e.u) | bit(e.v);
    std::vector<int> avoided;
    for (int v = 0; v < n; ++v)
      if (!(used & bit(v)) && rng.below(4) == 0) avoided.push_back(v);
    const VertexSet aset = VertexSet::from(n, avoided);
    const Mask a = testing_util::mask_of(avoided);
    const bool component_rule = rng.below(3) == 0;
    const int level = 1 + static_cast<int>(rng.below(2));
    const CycleRequirement want{component_rule ? ResidualRule::avoided_in_component : ResidualRule::level, level};
    const SearchOutcome out = find_cycle_with_residual(g, aset, req, want);
    ASSERT_EQ(out.found(), bf_cycle(g, a, req, level, component_rule)) << "trial " << trial;
    if (out.found()) {
      ++found;
      expect_verifies(g, out);
      EXPECT_EQ(is_induced_cycle(g, out.certificate->cycle), [&] {
        const auto& c = out.certificate->cycle;
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 2; j < c.size(); ++j)
            if (!(i == 0 && j + 1 == c.size()) && g.adjacent(c[i], c[j])) return false;
        return true;
      }());
    }
  }
  EXPECT_GT(found, 50);
}

// Exhaustive enumeration visits exactly the closed-form number of routes.
TEST(EnumerationTest, CompleteGraphCounts) {
  for (int n = 2; n <= 7; ++n) {
    const Graph k = Graph::complete(n);
    Budget budget;
    RouteQuery q;
    q.shape = RouteShape::path;
    q.s = 0;
    q.t = 1;
    q.allowed = k.vertices();
    const EnumerationStats st =
        enumerate_routes(k, q, budget, [](const VertexSet&) { return true; }, [](const Route&) { return false; });
    EXPECT_EQ(st.end, EnumerationEnd::exhausted);
    EXPECT_EQ(st.routes, bf::complete_path_count(n)) << n;
  }
  const Graph k7 = Graph::complete(7);
  auto count = [&](RouteShape shape, std::vector<Edge> req) {
    Budget budget;
    RouteQuery q;
    q.shape = shape;
    q.s = 0;
    q.t = 1;
    q.required = std::move(req);
    q.allowed = k7.vertices();
    return enumerate_routes(k7, q, budget, [](const VertexSet&) { return true; }, [](const Route&) { return false; })
        .routes;
  };
  // Pairs of internally disjoint 0-1 paths in K7, counted by brute force.
  std::uint64_t pairs = 0;
  path_pairs(k7, 0, 1, bf::all(7), [&](const std::vector<int>&, const std::vector<int>&) { ++pairs; });
  EXPECT_EQ(count(RouteShape::two_paths, {}), pairs);
  // Cycles through 0-1: 0-1 paths of length at least 2.
  EXPECT_EQ(count(RouteShape::cycle_through_edge, {{0, 1}}), bf::complete_path_count(7) - 1);
  std::uint64_t through_both = 0;
  Graph h = k7;
  h.remove_edge(0, 1);
  bf::paths(h, 0, 1, bf::all(7), [&](const std::vector<int>& p) { through_both += consecutive(p, 2, 3) ? 1 : 0; });
  EXPECT_EQ(count(RouteShape::cycle_through_edges, {{0, 1}, {2, 3}}), through_both);
}

TEST(EnumerationTest, BudgetStopsSearch) {
  // K7 plus a pendant vertex: every residual keeps the pendant vertex with
  // degree at most 1, so level 2 is impossible and exhaustion needs every path.
  Graph g(8);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) g.add_edge(u, v);
  g.add_edge(2, 7);
  EXPECT_EQ(find_k_paths_with_residual(g, VertexSet(8), 0, 1, 1, 2).status, SearchStatus::absent);
  Budget tiny;
  tiny.with_node_limit(5);
  SearchOptions opts;
  opts.budget = &tiny;
  EXPECT_EQ(find_k_paths_with_residual(g, VertexSet(8), 0, 1, 1, 2, opts).status, SearchStatus::budget_exhausted);
}

TEST(InducedCycleTest, Examples) {
  EXPECT_TRUE(is_induced_cycle(testing_util::cycle(5), {0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_induced_cycle(Graph::complete(4), {0, 1, 2, 3}));
  EXPECT_TRUE(is_induced_cycle(Graph::complete(4), {0, 1, 2}));
}

}  // namespace
