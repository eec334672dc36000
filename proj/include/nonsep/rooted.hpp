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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

/// (G, {a_1..a_m}, b1, b2): a graph with avoided vertices and two terminals.
/// The graph is shared so that many root choices over one host stay cheap.
class RootedGraph {
 public:
  RootedGraph(Graph g, std::vector<int> avoided, int b1, int b2);
  RootedGraph(std::shared_ptr<const Graph> g, std::vector<int> avoided, int b1, int b2);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const { return graph_; }
  const std::vector<int>& avoided() const { return avoided_; }
  const VertexSet& avoided_set() const { return avoided_set_; }
  /// A together with b1 and b2.
  const VertexSet& roots() const { return roots_; }
  int b1() const { return b1_; }
  int b2() const { return b2_; }
  int m() const { return static_cast<int>(avoided_.size()); }

 private:
  void validate() const;

  std::shared_ptr<const Graph> graph_;
  std::vector<int> avoided_;
  int b1_;
  int b2_;
  VertexSet avoided_set_;
  VertexSet roots_;
};

/// Family of nonempty, pairwise remote vertex sets outside `roots`.
struct SCollection {
  std::vector<VertexSet> parts;
  VertexSet roots;
};

/// Parts nonempty, disjoint from roots, and N[X_i] misses X_j for i != j.
bool validate_collection(const Graph& g, const VertexSet& roots, const SCollection& c);

enum class ContractionVariant {
  plain,        // G/X
  root_closed,  // rooted G/X: plus every root pair except b1b2
  restricted,   // rooted G|X: minus contraction-made edges from non-roots to roots
};

struct ContractionResult {
  Graph graph;
  std::vector<int> origin;  // new id -> original vertex
  ContractionVariant variant = ContractionVariant::plain;
};

ContractionResult contract_plain(const Graph& g, const SCollection& c);
ContractionResult contract_root_closed(const RootedGraph& r, const SCollection& c);
ContractionResult contract_restricted(const RootedGraph& r, const SCollection& c);

/// Edge count of a contraction without building it and without validating
/// the collection. `b1`/`b2` name the excepted root pair.
int contracted_edge_count(const Graph& g, const VertexSet& roots, int b1, int b2,
                          std::span<const VertexSet> parts, ContractionVariant variant);

/// An exact multiple of 1/2. Every threshold here has denominator 1 or 2.
class Halves {
 public:
  constexpr Halves() = default;
  static constexpr Halves from_doubled(long long doubled) {
    Halves h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr Halves from_integer(long long v) { return from_doubled(2 * v); }
  constexpr long long doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  std::string to_string() const;
  friend constexpr auto operator<=>(const Halves&, const Halves&) = default;

 private:
  long long doubled_ = 0;
};

enum class BoundName { thm23, lemma31, thm22 };

std::string_view to_string(BoundName b);
BoundName parse_bound_name(std::string_view s);

/// thm23:   e(G|X) <= (m+2)v - m^2/2 - 5m/2 - 4, caps |N(X)| <= m+2
/// lemma31: e(G|X) <= 4v - 11,                   caps |N(X)| <= 4
/// thm22:   e(G/X) <= (m+1)v - m^2/2 - 3m/2 - 1, caps |N(X)| <= m+1 (root-closed count)
struct BoundSpec {
  BoundName name = BoundName::thm23;
  int m = 0;

  int neighborhood_cap() const;
  ContractionVariant measured_variant() const;
};

Halves evaluate_bound(const BoundSpec& spec, int v);

struct WitnessVerdict {
  std::vector<int> neighborhood_sizes;
  int cap = 0;
  int vertices = 0;
  int edges_measured = 0;
  Halves threshold;
  bool caps_ok = false;
  bool bound_ok = false;
  bool pass() const { return caps_ok && bound_ok; }
};

/// Throws std::invalid_argument when `c` is not a roots-collection of r.
WitnessVerdict check_witness(const RootedGraph& r, const SCollection& c, const BoundSpec& spec);

}  // namespace nonsep
