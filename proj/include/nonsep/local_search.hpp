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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nonsep/budget.hpp"
#include "nonsep/certificate.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

/// Shape of the route the engine maintains.
enum class RouteKind {
  path,                 // one s-t path
  two_paths,            // two internally disjoint s-t paths
  cycle_through_edge,   // a cycle through edges[0]
  cycle_through_edges,  // a cycle through edges[0] and edges[1]
};

/// Whether B is the component or the block of the residual holding A.
enum class ResidualMode { component, block };

std::string_view to_string(RouteKind k);

struct LocalProblem {
  const Graph* graph = nullptr;
  VertexSet avoided;
  RouteKind kind = RouteKind::cycle_through_edges;
  int s = -1;
  int t = -1;
  std::vector<Edge> edges;
  int level = 1;  // target residual level: 1 connected, 2 two-connected
  ResidualMode mode = ResidualMode::component;

  /// Throws std::invalid_argument when the problem is malformed.
  void validate() const;
};

using Potential = std::vector<int>;

/// Lexicographic order; a proper prefix is smaller than its extensions.
std::strong_ordering lex_compare(const Potential& p, const Potential& q);

/// Attachment interval of B_t on a path; -1 while absent.
struct Markers {
  int c = -1;
  int d = -1;
  bool present() const { return c >= 0; }
};

/// The extremal-choice state: a route, B, and the components B_1..B_t of
/// the rest of the residual, sorted by size (ties by smallest vertex).
struct SearchState {
  // Route pieces. For two-edge cycles paths[0] runs from an end of edges[0]
  // to an end of edges[1] and paths[1] runs back; for two_paths both run
  // from s to t; otherwise there is a single path.
  std::vector<Path> paths;
  VertexSet route;
  VertexSet block;  // B
  std::vector<VertexSet> comps;
  std::vector<Markers> markers;  // one per path when two paths exist
  bool valid = false;            // A lies inside one block/component
  Potential potential;

  int t() const { return static_cast<int>(comps.size()); }
  /// Closed vertex sequence for cycle kinds.
  std::vector<int> cycle(const LocalProblem& p) const;
};

/// Builds the state for a route. `valid` is false when A is split.
SearchState evaluate_state(const LocalProblem& p, std::vector<Path> paths);

/// True when the residual meets the target level and equals B.
bool is_success(const LocalProblem& p, const SearchState& s);

/// Initial state from a flow-based route (depth-first augmentation, then
/// minimum cost) or, failing that, from an enumerated route with A inside
/// one component; nullopt when no route with a valid B exists.
std::optional<SearchState> init_state(const LocalProblem& p, Budget& budget);

/// Resets c_i, d_i to the extreme attachments of B_t on each path.
void init_markers(const LocalProblem& p, SearchState& s);

struct Operation1Update {
  int path = 0;     // i
  int u = -1;       // vertex of Q_i that became a marker
  int v = -1;       // its neighbour in P_j(c_j, d_j)
  int q_before = 0;  // |V(Q_1 u Q_2)| before the update
  int q_after = 0;
};

/// Vertices of Q_1 and Q_2.
VertexSet operation1_q(const SearchState& s, int universe);

/// One widening step; nullopt at the fixpoint. Requires two paths and t >= 1
/// and throws on markers outside their path or out of order.
std::optional<Operation1Update> operation1_step(const LocalProblem& p, SearchState& s);

/// No edge joins Q_1 + Q_2 to P_1(c_1,d_1) + P_2(c_2,d_2) + B_t.
bool claim43_holds(const LocalProblem& p, const SearchState& s);

struct Move {
  std::string kind;  // shortcut, case1, case2, reroute, global-reroute
  SearchState next;
};

/// A strictly potential-increasing move, preferring one that reaches
/// success, else the largest resulting potential; nullopt at a local
/// optimum. Throws std::invalid_argument on a successful state.
std::optional<Move> improve(const LocalProblem& p, const SearchState& s, Budget& budget);

enum class LocalStatus { success, stalled, no_route, budget_exhausted };
std::string_view to_string(LocalStatus s);

struct LocalSearchOptions {
  Budget* budget = nullptr;
  std::ostream* trace = nullptr;  // JSON lines, one per accepted move
  bool record_trace = true;       // keep trace records in the result
};

struct LocalSearchResult {
  LocalStatus status = LocalStatus::stalled;
  std::optional<Certificate> certificate;
  int moves = 0;
  int operation1_updates = 0;
  bool monotone = true;             // every accepted move raised the potential
  bool operation1_shrinking = true;  // every update shrank Q_1 + Q_2
  bool claim43_ok = true;            // fixpoint predicate held whenever paths were induced
  std::vector<nlohmann::json> trace;
  nlohmann::json diagnostics;  // final state on a stall
};

LocalSearchResult run_local_search(const LocalProblem& p, const LocalSearchOptions& opts = {});

/// Two-edge cycle with connected residual (Theorem 1.5 shape).
LocalSearchResult run_local_search(const Graph& g, const VertexSet& avoided, Edge e1, Edge e2,
                                   const LocalSearchOptions& opts = {});

/// Single s-t path with two-connected residual.
LocalSearchResult path_improvement(const Graph& g, const VertexSet& avoided, int s, int t,
                                   const LocalSearchOptions& opts = {});

/// State summary used in traces and stall reports.
nlohmann::json describe_state(const LocalProblem& p, const SearchState& s);

}  // namespace nonsep
