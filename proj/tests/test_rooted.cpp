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

#include "nonsep/generate.hpp"
#include "nonsep/rooted.hpp"
#include "nonsep/rng.hpp"
#include "brute_force.hpp"
#include "test_util.hpp"

namespace {

using namespace nonsep;
using testing_util::make;
using testing_util::mask_of;
using testing_util::path;

SCollection parts_of(int n, std::vector<std::vector<int>> parts, std::vector<int> roots = {}) {
  SCollection c;
  c.roots = VertexSet::from(n, roots);
  for (const auto& p : parts) c.parts.push_back(VertexSet::from(n, p));
  return c;
}

std::vector<std::pair<int, int>> original_edges(const ContractionResult& r) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : r.graph.edges()) {
    int u = r.origin[static_cast<std::size_t>(e.u)];
    int v = r.origin[static_cast<std::size_t>(e.v)];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// b1 = 0, x = 1, a1 = 2, y = 3, b2 = 4.
RootedGraph lemma32_path() { return RootedGraph(path(5), {2}, 0, 4); }

TEST(RootedGraphTest, RootsMustBeDistinctAndInRange) {
  EXPECT_THROW(RootedGraph(path(3), {0}, 0, 2), std::invalid_argument);
  EXPECT_THROW(RootedGraph(path(3), {}, 1, 1), std::invalid_argument);
  EXPECT_THROW(RootedGraph(path(3), {5}, 0, 1), std::out_of_range);
  RootedGraph r(path(4), {2, 3}, 0, 1);
  EXPECT_EQ(r.m(), 2);
  EXPECT_EQ(r.roots().count(), 4);
}

TEST(CollectionTest, Examples) {
  const Graph p = path(5);
  EXPECT_TRUE(validate_collection(p, VertexSet(5, {0, 4}), parts_of(5, {{1}, {3}})));
  EXPECT_FALSE(validate_collection(p, VertexSet(5, {0, 4}), parts_of(5, {{1}, {2}})));
  EXPECT_TRUE(validate_collection(p, VertexSet(5, {0, 4}), parts_of(5, {})));
  EXPECT_FALSE(validate_collection(p, VertexSet(5, {0, 4}), parts_of(5, {{0}})));
  EXPECT_FALSE(validate_collection(p, VertexSet(5, {0, 4}), parts_of(5, {{}})));
  EXPECT_FALSE(validate_collection(p, VertexSet(5, {0, 4}), parts_of(5, {{1, 2}, {2, 3}})));
}

TEST(ContractionTest, PlainExamples) {
  const ContractionResult p = contract_plain(path(5), parts_of(5, {{2}}));
  EXPECT_EQ(p.origin, (std::vector<int>{0, 1, 3, 4}));
  EXPECT_EQ(original_edges(p), (std::vector<std::pair<int, int>>{{0, 1}, {1, 3}, {3, 4}}));
  EXPECT_EQ(p.graph, path(4));
  EXPECT_EQ(p.variant, ContractionVariant::plain);

  Graph star = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(contract_plain(star, parts_of(5, {{0}})).graph, Graph::complete(4));

  Graph g = testing_util::random_graph(8, 40, 1);
  EXPECT_EQ(contract_plain(g, parts_of(8, {})).graph, g);
  EXPECT_THROW(contract_plain(path(5), parts_of(5, {{1}, {2}})), std::invalid_argument);
}

TEST(ContractionTest, RootClosedExamples) {
  // a1 = 0, a2 = 1, b1 = 2, b2 = 3, u = 4. The clique on N(u) already
  // contains b1b2; the closure rule only declines to add it.
  Graph g = make(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}});
  RootedGraph r(g, {0, 1}, 2, 3);
  const ContractionResult rc = contract_root_closed(r, parts_of(5, {{4}}));
  EXPECT_EQ(rc.graph.order(), 4);
  EXPECT_EQ(rc.graph.size(), 6);
  // Without the part, the closure alone gives K4 minus b1b2.
  const ContractionResult none = contract_root_closed(RootedGraph(Graph(4), {0, 1}, 2, 3), parts_of(4, {}));
  EXPECT_EQ(none.graph.size(), 5);
  EXPECT_FALSE(none.graph.adjacent(2, 3));

  Graph h = testing_util::random_graph(7, 50, 2);
  EXPECT_EQ(contract_root_closed(RootedGraph(h, {}, 0, 1), parts_of(7, {})).graph, h);

  const ContractionResult lp = contract_root_closed(lemma32_path(), parts_of(5, {{1}, {3}}));
  EXPECT_EQ(original_edges(lp), (std::vector<std::pair<int, int>>{{0, 2}, {2, 4}}));
}

TEST(ContractionTest, RestrictedExamples) {
  // a1 = 0, b1 = 1, b2 = 2, x = 3, w = 4, z = 5. N(x) = {a1, w} makes w-a1.
  Graph g = make(6, {{3, 0}, {3, 4}, {4, 5}, {5, 1}, {1, 2}, {5, 2}});
  RootedGraph r(g, {0}, 1, 2);
  const SCollection c = parts_of(6, {{3}});
  const ContractionResult closed = contract_root_closed(r, c);
  const ContractionResult restricted = contract_restricted(r, c);
  auto has = [](const ContractionResult& res, int u, int v) {
    auto e = original_edges(res);
    return std::find(e.begin(), e.end(), std::pair{std::min(u, v), std::max(u, v)}) != e.end();
  };
  EXPECT_TRUE(has(closed, 4, 0));
  EXPECT_FALSE(has(restricted, 4, 0));
  EXPECT_TRUE(has(restricted, 5, 1));  // an original edge survives

  Graph h = testing_util::random_graph(7, 50, 3);
  EXPECT_EQ(contract_restricted(RootedGraph(h, {}, 0, 1), parts_of(7, {})).graph, h);

  const ContractionResult lp = contract_restricted(lemma32_path(), parts_of(5, {{1}, {3}}));
  EXPECT_EQ(lp.graph, contract_root_closed(lemma32_path(), parts_of(5, {{1}, {3}})).graph);
  EXPECT_EQ(lp.graph.size(), 2);
}

TEST(BoundTest, Examples) {
  EXPECT_EQ(evaluate_bound({BoundName::thm23, 2}, 5), Halves::from_integer(9));
  EXPECT_EQ(evaluate_bound({BoundName::lemma31, 2}, 5), Halves::from_integer(9));
  EXPECT_EQ(evaluate_bound({BoundName::thm23, 0}, 2), Halves::from_integer(0));
  EXPECT_EQ(evaluate_bound({BoundName::thm22, 0}, 3), Halves::from_integer(2));
  EXPECT_EQ(evaluate_bound({BoundName::thm23, 1}, 3), Halves::from_integer(2));
  EXPECT_EQ(evaluate_bound({BoundName::thm23, 1}, 4), Halves::from_integer(5));
  EXPECT_THROW(evaluate_bound({BoundName::thm23, 1}, -1), std::invalid_argument);
  EXPECT_EQ(Halves::from_doubled(7).to_string(), "7/2");
  EXPECT_FALSE(Halves::from_doubled(7).is_integer());
  EXPECT_EQ(parse_bound_name("lemma31"), BoundName::lemma31);
  EXPECT_THROW(parse_bound_name("thm99"), std::invalid_argument);
}

TEST(BoundTest, DoubledFormulaIsExact) {
  for (int m = 0; m <= 6; ++m)
    for (int v = 0; v <= 40; ++v) {
      EXPECT_EQ(evaluate_bound({BoundName::thm23, m}, v).doubled(), 2LL * (m + 2) * v - m * m - 5 * m - 8);
      EXPECT_EQ(evaluate_bound({BoundName::thm22, m}, v).doubled(), 2LL * (m + 1) * v - m * m - 3 * m - 2);
      // m^2 + 5m and m^2 + 3m are always even.
      EXPECT_TRUE(evaluate_bound({BoundName::thm23, m}, v).is_integer());
      EXPECT_TRUE(evaluate_bound({BoundName::thm22, m}, v).is_integer());
    }
  for (int v = 2; v <= 50; ++v) EXPECT_EQ(evaluate_bound({BoundName::lemma31, 2}, v).doubled(), 8LL * v - 22);
}

TEST(BoundTest, CapsAndVariants) {
  EXPECT_EQ((BoundSpec{BoundName::thm23, 3}).neighborhood_cap(), 5);
  EXPECT_EQ((BoundSpec{BoundName::lemma31, 2}).neighborhood_cap(), 4);
  EXPECT_EQ((BoundSpec{BoundName::thm22, 3}).neighborhood_cap(), 4);
  EXPECT_EQ((BoundSpec{BoundName::thm22, 0}).measured_variant(), ContractionVariant::root_closed);
  EXPECT_EQ((BoundSpec{BoundName::thm23, 0}).measured_variant(), ContractionVariant::restricted);
}

TEST(WitnessCheckTest, Examples) {
  const WitnessVerdict v = check_witness(lemma32_path(), parts_of(5, {{1}, {3}}), {BoundName::thm23, 1});
  EXPECT_EQ(v.neighborhood_sizes, (std::vector<int>{2, 2}));
  EXPECT_EQ(v.cap, 3);
  EXPECT_EQ(v.vertices, 3);
  EXPECT_EQ(v.edges_measured, 2);
  EXPECT_EQ(v.threshold, Halves::from_integer(2));
  EXPECT_TRUE(v.pass());

  const WitnessVerdict k6 = check_witness(RootedGraph(Graph::complete(6), {}, 0, 1), parts_of(6, {}), {BoundName::thm23, 0});
  EXPECT_EQ(k6.edges_measured, 15);
  EXPECT_EQ(k6.threshold, Halves::from_integer(8));
  EXPECT_FALSE(k6.pass());

  const WitnessVerdict tiny = check_witness(RootedGraph(Graph(2), {}, 0, 1), parts_of(2, {}), {BoundName::thm23, 0});
  EXPECT_EQ(tiny.edges_measured, 0);
  EXPECT_TRUE(tiny.pass());

  EXPECT_THROW(check_witness(lemma32_path(), parts_of(5, {{1}, {2}}), {BoundName::thm23, 1}), std::invalid_argument);
}

TEST(WitnessCheckTest, CapViolationFails) {
  // Centre 4 of a K_{1,5}: |N({4})| = 5 > m + 2 = 3.
  Graph star = make(6, {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {4, 5}});
  const WitnessVerdict v = check_witness(RootedGraph(star, {0}, 1, 2), parts_of(6, {{4}}), {BoundName::thm23, 1});
  EXPECT_EQ(v.neighborhood_sizes, (std::vector<int>{5}));
  EXPECT_FALSE(v.caps_ok);
  EXPECT_FALSE(v.pass());
}

// Contraction invariants on random rooted instances, against the pairwise
// brute-force count.
TEST(ContractionTest, RandomInvariants) {
  Rng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(5));
    Graph g = testing_util::random_graph(n, 20 + static_cast<int>(rng.below(50)), rng.next());
    const int m = static_cast<int>(rng.below(3));
    const std::vector<int> roots = rng.sample(n, m + 2);
    std::vector<int> avoided(roots.begin(), roots.begin() + m);
    const int b1 = roots[static_cast<std::size_t>(m)];
    const int b2 = roots[static_cast<std::size_t>(m) + 1];
    RootedGraph r(g, avoided, b1, b2);
    // One or two single-component parts among the non-roots.
    std::vector<std::vector<int>> parts;
    for (const VertexSet& comp : components(g, g.vertices() - r.roots())) {
      if (parts.size() == 2) break;
      if (rng.below(2) == 0) parts.push_back(comp.to_vector());
    }
    const SCollection c = parts_of(n, parts, r.roots().to_vector());
    ASSERT_TRUE(validate_collection(g, r.roots(), c));
    const ContractionResult plain = contract_plain(g, c);
    const ContractionResult closed = contract_root_closed(r, c);
    const ContractionResult restricted = contract_restricted(r, c);
    EXPECT_EQ(plain.graph.order(), closed.graph.order());
    EXPECT_EQ(restricted.graph.order(), closed.graph.order());
    int covered = 0;
    for (const auto& p : c.parts) covered += p.count();
    EXPECT_EQ(plain.graph.order(), n - covered);
    EXPECT_LE(restricted.graph.size(), closed.graph.size());
    EXPECT_LE(plain.graph.size(), closed.graph.size());

    std::vector<bf::Mask> masks;
    for (const auto& p : c.parts) masks.push_back(mask_of(p));
    const bf::Mask rm = mask_of(r.roots());
    EXPECT_EQ(plain.graph.size(), bf::contracted_edges(g, rm, b1, b2, masks, bf::Variant::plain));
    EXPECT_EQ(closed.graph.size(), bf::contracted_edges(g, rm, b1, b2, masks, bf::Variant::root_closed));
    EXPECT_EQ(restricted.graph.size(), bf::contracted_edges(g, rm, b1, b2, masks, bf::Variant::restricted));
    EXPECT_EQ(contracted_edge_count(g, r.roots(), b1, b2, c.parts, ContractionVariant::restricted),
              restricted.graph.size());

    // Part order does not matter.
    SCollection rev = c;
    std::reverse(rev.parts.begin(), rev.parts.end());
    EXPECT_EQ(contract_restricted(r, rev).graph, restricted.graph);
    EXPECT_EQ(contract_plain(g, rev).graph, plain.graph);
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

// The empty collection never witnesses on (2m+4)-connected graphs.
TEST(WitnessCheckTest, EmptyCollectionFailsOnHighlyConnectedGraphs) {
  for (int m = 0; m <= 2; ++m)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const int kappa = 2 * m + 4;
      const int n = kappa + 2 + static_cast<int>(seed % 3);
      Graph g = gen_random(n, kappa, seed);
      std::vector<int> avoided;
      for (int i = 0; i < m; ++i) avoided.push_back(i + 2);
      RootedGraph r(g, avoided, 0, 1);
      EXPECT_FALSE(check_witness(r, parts_of(n, {}), {BoundName::thm23, m}).pass());
    }
}

}  // namespace
