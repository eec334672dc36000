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

#include <functional>
#include <span>
#include <vector>

#include "nonsep/budget.hpp"
#include "nonsep/enumerate.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/rooted.hpp"

namespace nonsep {

enum class WitnessMode {
  exhaustive,        // every roots-collection with at most max_parts parts
  separator_guided,  // parts are unions of components of G - (roots + T), |T| <= cap
};

struct WitnessOptions {
  WitnessMode mode = WitnessMode::exhaustive;
  int vertex_cap = 10;  // exhaustive mode refuses larger graphs
  int max_parts = 4;
  int separator_cap = -1;  // separator-guided |T| limit; -1 uses the bound's neighbourhood cap
  Budget* budget = nullptr;
};

/// Return true to stop.
using CollectionVisit = std::function<bool(std::span<const VertexSet> parts)>;

/// Visits roots-collections. Exhaustive order: larger unions of parts first,
/// then finer partitions first, the empty collection last. Each collection
/// is visited once. Throws std::invalid_argument when exhaustive mode is
/// asked for a graph above the vertex cap.
EnumerationStats enumerate_collections(const Graph& g, const VertexSet& roots, const WitnessOptions& opts,
                                       const CollectionVisit& visit);

/// First collection passing check_witness for the bound. In separator-guided
/// mode an absent result only means none of the searched shapes worked.
SearchOutcome find_witness_collection(const RootedGraph& r, const BoundSpec& spec, const WitnessOptions& opts = {});

/// First collection with every |N(X)| <= 3 whose plain contraction is
/// disc-planar with boundary (a1, b1, a2, b2). Requires m = 2.
SearchOutcome find_planar_collection(const RootedGraph& r, const WitnessOptions& opts = {});

/// Builds the witness certificate for a collection (pass may be false).
Certificate witness_certificate(const RootedGraph& r, std::span<const VertexSet> parts, const BoundSpec& spec);

}  // namespace nonsep
