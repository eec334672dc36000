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

#include "nonsep/certificate.hpp"
#include "nonsep/graph_io.hpp"
#include "nonsep/rng.hpp"
#include "test_util.hpp"

namespace {

using namespace nonsep;

TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(emit_graph6(Graph(2)), "A?");
  EXPECT_EQ(emit_graph6(Graph::complete(2)), "A_");
  EXPECT_EQ(emit_graph6(Graph::complete(3)), "Bw");
  EXPECT_EQ(emit_graph6(Graph::complete(4)), "C~");
  EXPECT_EQ(emit_graph6(testing_util::petersen()), "IheA@GUAo");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), testing_util::petersen());
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), Graph::complete(4));
}

TEST(Graph6Test, LongFormHeader) {
  // n = 63 switches to the four-byte size prefix.
  Graph g = testing_util::random_graph(63, 10, 5);
  const std::string text = emit_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6Test, RoundTrip) {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.below(21));
    Graph g = testing_util::random_graph(n, static_cast<int>(rng.below(101)), rng.next());
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
    EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
  }
}

TEST(Graph6Test, MalformedInputReportsOffset) {
  try {
    parse_graph6("C~~");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);  // first surplus byte
  }
  try {
    parse_graph6("C ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A`"), ParseError);  // padding bits set
}

TEST(Graph6Test, Stream) {
  const auto gs = parse_graph6_stream("C~\n\nBw\nA_\n");
  ASSERT_EQ(gs.size(), 3U);
  EXPECT_EQ(gs[1], Graph::complete(3));
  try {
    parse_graph6_stream("C~\nB!\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4U);
  }
}

TEST(EdgeListTest, EmitTriangle) {
  EXPECT_EQ(emit_edge_list(Graph::complete(3)), "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(parse_graph("3 3\n0 1\n0 2\n1 2\n"), Graph::complete(3));
  EXPECT_EQ(parse_graph("C~"), Graph::complete(4));
}

TEST(EdgeListTest, LoopIsRejectedWithOffset) {
  try {
    parse_edge_list("2 1\n0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    EXPECT_EQ(e.offset(), 4U);
  }
  EXPECT_THROW(parse_edge_list("2 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 x"), ParseError);
}

TEST(HashTest, StableAndSensitive) {
  EXPECT_EQ(graph_hash(Graph::complete(4)), graph_hash(parse_graph6("C~")));
  EXPECT_NE(graph_hash(Graph::complete(4)), graph_hash(Graph::complete(3)));
  EXPECT_EQ(graph_hash(Graph::complete(4)).size(), 16U);
}

TEST(CertificateJsonTest, RoundTrip) {
  Certificate c;
  c.kind = CertificateKind::witness;
  c.avoided = {3};
  c.terminals = {0, 4};
  c.parts = {{1}, {2}};
  c.caps = {2, 2};
  c.cap_limit = 3;
  c.edges_measured = 2;
  c.threshold_doubled = 4;
  c.bound = "thm23";
  c.pass = true;
  c.graph_hash = "00000000deadbeef";
  c.seed = 9;
  const nlohmann::json j = to_json(c);
  EXPECT_EQ(j["kind"], "witness");
  EXPECT_EQ(j["payload"]["spec"], "thm23");
  EXPECT_EQ(j["roots"]["terminals"], (std::vector<int>{0, 4}));
  const Certificate back = certificate_from_json(j);
  EXPECT_EQ(to_json(back), j);

  Certificate cyc;
  cyc.kind = CertificateKind::cycle;
  cyc.edges = {{0, 1}, {2, 3}};
  cyc.cycle = {0, 1, 2, 3};
  cyc.rule = ResidualRule::level;
  cyc.level = 1;
  EXPECT_EQ(to_json(certificate_from_json(to_json(cyc))), to_json(cyc));
}

TEST(CertificateJsonTest, BadFieldsAreNamed) {
  nlohmann::json j = {{"kind", "paths"}, {"payload", {{"paths", "oops"}}}};
  try {
    certificate_from_json(j);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("paths"), std::string::npos);
  }
  EXPECT_THROW(certificate_from_json(nlohmann::json{{"kind", "nonsense"}}), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(nlohmann::json::array()), std::invalid_argument);
}

}  // namespace
