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
#include <vector>

#include "nonsep/budget.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

/// The route families the oracle enumerates.
enum class RouteShape {
  path,                 // one s-t path
  two_paths,            // two internally disjoint s-t paths (a cycle through s and t)
  cycle_through_edge,   // a cycle through required[0]
  cycle_through_edges,  // a cycle through required[0] and required[1]
};

struct RouteQuery {
  RouteShape shape = RouteShape::path;
  int s = -1;
  int t = -1;
  std::vector<Edge> required;
  VertexSet allowed;  // route vertices must lie here
};

/// A candidate route. `segments` are the paths of the route: the s-t paths,
/// or for cycles the two arcs left after deleting the required edges (a single
/// arc when only one edge is required or the two edges share a vertex).
/// `cycle` is the closed vertex sequence for cycle shapes.
struct Route {
  std::vector<std::vector<int>> segments;
  std::vector<int> cycle;
  VertexSet vertices;
  int total_length = 0;
};

/// Return false to abandon every route extending the given vertex set.
using RoutePrune = std::function<bool(const VertexSet& used)>;
/// Return true to stop the enumeration.
using RouteVisit = std::function<bool(const Route& route)>;

enum class EnumerationEnd { stopped, exhausted, budget_exhausted };

struct EnumerationStats {
  EnumerationEnd end = EnumerationEnd::exhausted;
  std::uint64_t routes = 0;
};

/// Visits every route of the query exactly once, in order of nondecreasing
/// total segment length and, within a length, depth-first by neighbour id.
EnumerationStats enumerate_routes(const Graph& g, const RouteQuery& query, Budget& budget, const RoutePrune& prune,
                                  const RouteVisit& visit);

}  // namespace nonsep
