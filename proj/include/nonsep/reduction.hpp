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

#include <array>
#include <vector>

#include "nonsep/graph.hpp"
#include "nonsep/rooted.hpp"

namespace nonsep {

/// G' for two disjoint edges e1 = b1b2 and e2 = b3b4: each pair keeps only
/// its edges to common neighbours of the pair and is then identified into
/// one vertex (b1' resp. b3').
struct EdgePairReduction {
  Graph graph;
  std::vector<int> to_original;  // new id -> original id (b1' -> b1, b3' -> b3)
  std::vector<int> to_local;     // original id -> new id; b2 -> b1', b4 -> b3'
  std::array<int, 4> b{};        // b1, b2, b3, b4 in original ids
  std::array<int, 4> u{};        // distinct private neighbours outside A and B
  int b1p = -1;
  int b3p = -1;
  std::vector<int> avoided;  // A in new ids
  std::vector<Edge> cross;   // kept original edges b_q b_p realising b1'b3'

  RootedGraph rooted() const;
};

/// Throws std::invalid_argument when the edges are missing, share a vertex,
/// touch A, or when no distinct u_1..u_4 exist.
EdgePairReduction reduction_contract_edge_pair(const Graph& g, const std::vector<int>& avoided, Edge e1, Edge e2);

/// Maps two internally disjoint b1'-b3' paths of G' (new ids) to a cycle of
/// G through e1 and e2 with the same vertex set outside {b1..b4}. Throws
/// when the input is not such a pair.
std::vector<int> pull_back_cycle(const EdgePairReduction& r, const std::vector<std::vector<int>>& paths);

}  // namespace nonsep
