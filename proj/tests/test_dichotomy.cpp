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

#include "nonsep/campaign.hpp"
#include "nonsep/dichotomy.hpp"
#include "nonsep/verify.hpp"
#include "test_util.hpp"

namespace {

using namespace nonsep;
using testing_util::make;

void expect_evidence_verifies(const Graph& g, const DichotomyVerdict& v) {
  for (const ClauseVerdict& c : v.clauses)
    if (c.evidence) {
      const Verification ok = verify_certificate(g, *c.evidence);
      EXPECT_TRUE(ok.ok) << c.name << ": " << ok.reason;
    }
  if (v.witness) {
    EXPECT_TRUE(verify_certificate(g, *v.witness).ok);
  }
}

TEST(Thm23DichotomyTest, Examples) {
  const RootedGraph k6(Graph::complete(6), {2}, 0, 1);
  const DichotomyVerdict v = check_thm23_dichotomy(k6);
  ASSERT_EQ(v.clauses.size(), 2U);
  EXPECT_EQ(v.clauses[0].branch, ClauseBranch::first);
  EXPECT_EQ(v.clauses[1].branch, ClauseBranch::first);
  EXPECT_FALSE(v.counterexample());
  expect_evidence_verifies(k6.graph(), v);

  const RootedGraph path(testing_util::path(5), {2}, 0, 4);
  const DichotomyVerdict p = check_thm23_dichotomy(path);
  EXPECT_FALSE(p.counterexample());
  EXPECT_TRUE(p.witness.has_value());
  ASSERT_EQ(p.clauses.size(), 2U);
  EXPECT_EQ(p.clauses[0].branch, ClauseBranch::witness);
  // (ii) holds outright: with m = 1 any neighbour of a1 off the roots will do.
  EXPECT_EQ(p.clauses[1].branch, ClauseBranch::first);
  expect_evidence_verifies(path.graph(), p);

  EXPECT_THROW(check_thm23_dichotomy(RootedGraph(Graph::complete(3), {2}, 0, 1)), std::invalid_argument);
}

TEST(SeymourDichotomyTest, Examples) {
  const RootedGraph k6(Graph::complete(6), {2, 3}, 0, 1);
  const DichotomyVerdict v = check_seymour_dichotomy(k6);
  ASSERT_FALSE(v.clauses.empty());
  EXPECT_EQ(v.clauses[0].branch, ClauseBranch::second);
  expect_evidence_verifies(k6.graph(), v);

  const RootedGraph c4(testing_util::cycle(4), {0, 2}, 1, 3);
  const DichotomyVerdict c = check_seymour_dichotomy(c4);
  EXPECT_EQ(c.clauses[0].branch, ClauseBranch::witness);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(c.witness->parts.empty());
  expect_evidence_verifies(c4.graph(), c);

  EXPECT_THROW(check_seymour_dichotomy(RootedGraph(Graph::complete(5), {2}, 0, 1)), std::invalid_argument);
}

TEST(Lemma31DichotomyTest, Examples) {
  // a1 = 0, a2 = 1, x = 2 adjacent to both, b1 = 3, b2 = 4.
  const RootedGraph shared(make(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}}), {0, 1}, 3, 4);
  const DichotomyVerdict s = check_lemma31_dichotomy(shared);
  EXPECT_EQ(s.clauses[0].branch, ClauseBranch::first);
  expect_evidence_verifies(shared.graph(), s);

  // Path a1 - b1 - x - b2 - a2 with a1 = 0, b1 = 1, x = 2, b2 = 3, a2 = 4.
  const RootedGraph p(testing_util::path(5), {0, 4}, 1, 3);
  const DichotomyVerdict w = check_lemma31_dichotomy(p);
  EXPECT_EQ(w.clauses[0].branch, ClauseBranch::witness);
  EXPECT_TRUE(w.witness.has_value());
  expect_evidence_verifies(p.graph(), w);

  EXPECT_THROW(check_lemma31_dichotomy(RootedGraph(Graph::complete(4), {2, 3}, 0, 1)), std::invalid_argument);
  EXPECT_THROW(check_lemma31_dichotomy(RootedGraph(Graph::complete(5), {2}, 0, 1)), std::invalid_argument);
}

TEST(DichotomySweepTest, Thm23FiveVerticesNoCounterexamples) {
  SweepOptions opts;
  opts.n_min = 5;
  opts.n_max = 5;
  const SweepReport rep = run_sweep("T2.3", 0, opts);
  EXPECT_EQ(rep.graphs, 1024U);
  EXPECT_EQ(rep.rooted, 1024U * 10U);
  EXPECT_EQ(rep.counterexamples, 0U);
  EXPECT_EQ(rep.undecided, 0U);
  EXPECT_GT(rep.witness, 0U);
  EXPECT_TRUE(rep.pass());
}

TEST(DichotomySweepTest, SerialAndParallelAgree) {
  SweepOptions serial;
  serial.n_min = 4;
  serial.n_max = 5;
  serial.threads = 1;
  SweepOptions parallel = serial;
  parallel.threads = 4;
  const SweepReport a = run_sweep("L3.1", 2, {5, 5, 1, 20});
  const SweepReport b = run_sweep("L3.1", 2, {5, 5, 4, 20});
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.counterexamples, 0U);
  const SweepReport c = run_sweep("T2.3", 1, serial);
  const SweepReport d = run_sweep("T2.3", 1, parallel);
  EXPECT_EQ(c.first, d.first);
  EXPECT_EQ(c.second, d.second);
  EXPECT_EQ(c.witness, d.witness);
  EXPECT_EQ(c.to_json()["counterexamples"], d.to_json()["counterexamples"]);
}

}  // namespace
