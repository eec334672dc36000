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

#include <optional>
#include <vector>

#include "nonsep/budget.hpp"
#include "nonsep/certificate.hpp"
#include "nonsep/graph.hpp"
#include "nonsep/rooted.hpp"

namespace nonsep {

/// Outcome of an exhaustive search: a certificate, a proof of absence (the
/// whole space was enumerated), or an unfinished search.
enum class SearchStatus { found, absent, budget_exhausted };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<Certificate> certificate;
  std::uint64_t routes_examined = 0;

  bool found() const { return status == SearchStatus::found; }
};

struct SearchOptions {
  Budget* budget = nullptr;  // nullptr: unlimited
  BlockConvention convention = BlockConvention::standard;
};

/// Residual predicates. `residual` is the vertex set of G - V(route).
bool avoided_in_component(const Graph& g, const VertexSet& residual, const VertexSet& avoided);
bool avoided_in_block(const Graph& g, const VertexSet& residual, const VertexSet& avoided, BlockConvention convention);

/// Smallest vertex outside targets and forbidden adjacent to every target.
std::optional<int> common_neighbor(const Graph& g, const VertexSet& targets, const VertexSet& forbidden);

/// b1-b2 path avoiding A with A inside one component of G - V(P).
SearchOutcome find_feasible_path(const RootedGraph& r, const SearchOptions& opts = {});
/// b1-b2 path avoiding A with A inside one block of G - V(P).
SearchOutcome find_2feasible_path(const RootedGraph& r, const SearchOptions& opts = {});

/// Two vertex-disjoint blocks of G, one containing A and one containing
/// {b1, b2}. Never needs a budget.
SearchOutcome check_22_feasible(const RootedGraph& r, BlockConvention convention = BlockConvention::standard);

/// Cycle through b1 and b2 avoiding A with A inside one block of G - V(C).
SearchOutcome find_22_feasible_cycle(const RootedGraph& r, const SearchOptions& opts = {});

/// k in {1,2} internally disjoint s-t paths avoiding `avoided` whose removal
/// leaves a graph meeting residual level l in {1,2}. Throws on s == t, on
/// terminals inside `avoided` and on k or l out of range.
SearchOutcome find_k_paths_with_residual(const Graph& g, const VertexSet& avoided, int s, int t, int k, int level,
                                         const SearchOptions& opts = {});

struct CycleRequirement {
  ResidualRule rule = ResidualRule::level;  // level or avoided_in_component
  int level = 1;
};

/// Cycle through one or two required edges avoiding `avoided` and meeting
/// the residual requirement. Throws when an edge is missing or touches
/// `avoided`.
SearchOutcome find_cycle_with_residual(const Graph& g, const VertexSet& avoided, const std::vector<Edge>& required,
                                       CycleRequirement requirement, const SearchOptions& opts = {});

/// No chord among the vertices of the cycle.
bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace nonsep
