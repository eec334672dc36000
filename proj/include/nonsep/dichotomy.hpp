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
#include <string>
#include <vector>

#include "nonsep/certificate.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/rooted.hpp"
#include "nonsep/witness.hpp"

namespace nonsep {

/// How one clause "either X or Y" was settled.
enum class ClauseBranch {
  first,           // first disjunct holds (common neighbour)
  second,          // second disjunct holds (feasibility)
  witness,         // both disjuncts fail but a witness collection exists
  counterexample,  // both disjuncts fail and no witness exists
  undecided,       // a search ran out of budget
};

std::string_view to_string(ClauseBranch b);

struct ClauseVerdict {
  std::string name;
  ClauseBranch branch = ClauseBranch::undecided;
  std::optional<Certificate> evidence;
};

struct DichotomyVerdict {
  std::vector<ClauseVerdict> clauses;
  std::optional<Certificate> witness;  // set once a witness was searched for and found
  bool witness_searched = false;

  // Alternative readings, reported separately and never counted as
  // counterexamples: clause outcomes under the strict block convention and,
  // for Theorem 2.3(ii), the literal two-disjoint-blocks reading.
  bool strict_holds = true;
  bool literal_22_holds = true;

  bool counterexample() const;
  bool undecided() const;
};

struct DichotomyOptions {
  WitnessOptions witness;
  Budget* budget = nullptr;
  bool alternative_readings = true;
};

/// Theorem 2.3: without a (thm23) witness, (i) roots share a neighbour
/// outside the roots or the instance is 2-feasible, and (ii) A shares a
/// neighbour outside the roots or a cycle through b1, b2 avoiding A leaves
/// A in a block. Throws when v(G) < m + 3.
DichotomyVerdict check_thm23_dichotomy(const RootedGraph& r, const DichotomyOptions& opts = {});

/// Theorem 2.1 (m = 2): feasible, or a collection with |N(X)| <= 3 whose
/// contraction is disc-planar with boundary (a1, b1, a2, b2).
DichotomyVerdict check_seymour_dichotomy(const RootedGraph& r, const DichotomyOptions& opts = {});

/// Lemma 3.1 (m = 2, v(G) >= 5): a1, a2 share a neighbour in G - {b1, b2},
/// or a lemma31 witness exists.
DichotomyVerdict check_lemma31_dichotomy(const RootedGraph& r, const DichotomyOptions& opts = {});

}  // namespace nonsep
