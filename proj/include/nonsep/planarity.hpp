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

/// True iff g embeds in a closed disc with `boundary` on the boundary circle
/// in the given cyclic order. Throws on duplicate or out-of-range vertices.
bool is_disc_planar(const Graph& g, const std::vector<int>& boundary);

/// Plain planarity of g.
bool is_planar(const Graph& g);

}  // namespace nonsep
