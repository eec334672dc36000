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

#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

struct Terminal {
  int vertex = 0;
  int capacity = 1;
};

enum class AugmentOrder {
  shortest,     // breadth-first augmenting paths
  depth_first,  // depth-first by neighbour id; tends to produce long routes
  min_cost,     // successive shortest paths, minimum total edge count
};

/// Unit vertex-capacity routing between terminal sets inside `allowed`.
struct RoutingProblem {
  VertexSet allowed;
  std::vector<Terminal> sources;
  std::vector<Terminal> sinks;
  int demand = 1;
  std::vector<Edge> excluded_edges;
  AugmentOrder order = AugmentOrder::shortest;
};

struct Routing {
  int value = 0;
  std::vector<Path> paths;  // each runs from a source to a sink
};

/// Routes up to `demand` units; non-terminal vertices carry at most one path.
/// Paths are returned sorted by (length, vertex sequence).
Routing route_paths(const Graph& g, const RoutingProblem& problem);

}  // namespace nonsep
