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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

/// Random graph with vertex connectivity at least kappa_min: start from K_n,
/// pick a target edge count, and delete edges in a shuffled order whenever
/// the deletion keeps kappa >= kappa_min. Throws unless 0 <= kappa_min < n.
Graph gen_random(int n, int kappa_min, std::uint64_t seed);

Graph gen_complete(int n);
/// C_n(jumps): i ~ i +- j (mod n). Jumps must lie in [1, n/2].
Graph gen_circulant(int n, const std::vector<int>& jumps);
/// Complete multipartite graph with the given positive part sizes.
Graph gen_multipartite(const std::vector<int>& parts);

/// Named family: "complete" {n}, "circulant" {n, j1, j2, ...},
/// "multipartite" {p1, p2, ...}.
Graph gen_family(const std::string& name, const std::vector<int>& params);

constexpr int kLabeledCap = 7;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_count(int n);

/// Bit i of `mask` selects the i-th pair in the order
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls fn(mask, graph) for every labeled graph on n <= 7 vertices in mask
/// order; fn returns false to stop early.
void enumerate_all_labeled(int n, const std::function<bool(std::uint64_t, const Graph&)>& fn);

}  // namespace nonsep
