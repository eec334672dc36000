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

#include "nonsep/dichotomy.hpp"

#include <stdexcept>

#include "nonsep/graph_io.hpp"

namespace nonsep {

std::string_view to_string(ClauseBranch b) {
  switch (b) {
    case ClauseBranch::first:
      return "first";
    case ClauseBranch::second:
      return "second";
    case ClauseBranch::witness:
      return "witness";
    case ClauseBranch::counterexample:
      return "counterexample";
    case ClauseBranch::undecided:
      return "undecided";
  }
  return "?";
}

bool DichotomyVerdict::counterexample() const {
  for (const auto& c : clauses)
    if (c.branch == ClauseBranch::counterexample) return true;
  return false;
}

bool DichotomyVerdict::undecided() const {
  for (const auto& c : clauses)
    if (c.branch == ClauseBranch::undecided) return true;
  return false;
}

namespace {

Certificate neighbor_certificate(const RootedGraph& r, int v, const VertexSet& targets, const VertexSet& forbidden) {
  Certificate c;
  c.kind = CertificateKind::common_neighbor;
  c.avoided = r.avoided();
  c.terminals = {r.b1(), r.b2()};
  c.vertex = v;
  c.targets = targets.to_vector();
  c.forbidden = forbidden.to_vector();
  c.graph_hash = graph_hash(r.graph());
  return c;
}

/// Settles a failed clause by the witness search, which is shared by all
/// clauses of one verdict.
template <typename Search>
void settle_by_witness(DichotomyVerdict& v, ClauseVerdict& clause, const Search& search) {
  if (!v.witness_searched) {
    v.witness_searched = true;
    SearchOutcome w = search();
    if (w.status == SearchStatus::budget_exhausted) {
      clause.branch = ClauseBranch::undecided;
      v.witness_searched = false;
      return;
    }
    v.witness = w.certificate;
  }
  clause.branch = v.witness ? ClauseBranch::witness : ClauseBranch::counterexample;
  clause.evidence = v.witness;
}

/// First disjunct by common neighbour, second by `feasible`.
template <typename Feasible>
ClauseVerdict disjunction(const RootedGraph& r, std::string name, const VertexSet& targets, const Feasible& feasible) {
  ClauseVerdict c;
  c.name = std::move(name);
  if (auto x = common_neighbor(r.graph(), targets, r.roots())) {
    c.branch = ClauseBranch::first;
    c.evidence = neighbor_certificate(r, *x, targets, r.roots());
    return c;
  }
  SearchOutcome f = feasible();
  if (f.found()) {
    c.branch = ClauseBranch::second;
    c.evidence = std::move(f.certificate);
  } else if (f.status == SearchStatus::budget_exhausted) {
    c.branch = ClauseBranch::undecided;
  } else {
    c.branch = ClauseBranch::counterexample;  // provisional until the witness search
  }
  return c;
}

}  // namespace

DichotomyVerdict check_thm23_dichotomy(const RootedGraph& r, const DichotomyOptions& opts) {
  const Graph& g = r.graph();
  if (g.order() < r.m() + 3) throw std::invalid_argument("Theorem 2.3 needs order at least m + 3");
  SearchOptions so{opts.budget, BlockConvention::standard};
  const BoundSpec spec{BoundName::thm23, r.m()};
  WitnessOptions wo = opts.witness;
  if (!wo.budget) wo.budget = opts.budget;
  auto witness = [&] { return find_witness_collection(r, spec, wo); };

  DichotomyVerdict v;
  v.clauses.push_back(disjunction(r, "i", r.roots(), [&] { return find_2feasible_path(r, so); }));
  v.clauses.push_back(disjunction(r, "ii", r.avoided_set(), [&] { return find_22_feasible_cycle(r, so); }));
  for (auto& c : v.clauses)
    if (c.branch == ClauseBranch::counterexample) settle_by_witness(v, c, witness);

  if (opts.alternative_readings) {
    SearchOptions strict{opts.budget, BlockConvention::strict};
    const bool i_common = v.clauses[0].branch == ClauseBranch::first;
    const bool ii_common = v.clauses[1].branch == ClauseBranch::first;
    const bool i_strict = i_common || find_2feasible_path(r, strict).found();
    const bool ii_strict = ii_common || find_22_feasible_cycle(r, strict).found();
    const bool ii_literal = ii_common || check_22_feasible(r).found();
    auto resolve = [&](bool holds) {
      if (holds) return true;
      if (!v.witness_searched) {
        SearchOutcome w = witness();
        if (w.status == SearchStatus::budget_exhausted) return true;
        v.witness_searched = true;
        v.witness = w.certificate;
      }
      return v.witness.has_value();
    };
    v.strict_holds = resolve(i_strict) && resolve(ii_strict);
    v.literal_22_holds = resolve(ii_literal);
  }
  return v;
}

DichotomyVerdict check_seymour_dichotomy(const RootedGraph& r, const DichotomyOptions& opts) {
  if (r.m() != 2) throw std::invalid_argument("Theorem 2.1 needs m = 2");
  SearchOptions so{opts.budget, BlockConvention::standard};
  WitnessOptions wo = opts.witness;
  if (!wo.budget) wo.budget = opts.budget;
  DichotomyVerdict v;
  ClauseVerdict c;
  c.name = "seymour";
  SearchOutcome f = find_feasible_path(r, so);
  if (f.found()) {
    c.branch = ClauseBranch::second;
    c.evidence = std::move(f.certificate);
  } else if (f.status == SearchStatus::budget_exhausted) {
    c.branch = ClauseBranch::undecided;
  } else {
    settle_by_witness(v, c, [&] { return find_planar_collection(r, wo); });
  }
  v.clauses.push_back(std::move(c));
  return v;
}

DichotomyVerdict check_lemma31_dichotomy(const RootedGraph& r, const DichotomyOptions& opts) {
  if (r.m() != 2) throw std::invalid_argument("Lemma 3.1 needs m = 2");
  const Graph& g = r.graph();
  if (g.order() < 5) throw std::invalid_argument("Lemma 3.1 needs at least five vertices");
  WitnessOptions wo = opts.witness;
  if (!wo.budget) wo.budget = opts.budget;
  DichotomyVerdict v;
  ClauseVerdict c;
  c.name = "lemma31";
  VertexSet terminals(g.order(), {r.b1(), r.b2()});
  if (auto x = common_neighbor(g, r.avoided_set(), terminals)) {
    c.branch = ClauseBranch::first;
    c.evidence = neighbor_certificate(r, *x, r.avoided_set(), terminals);
  } else {
    const BoundSpec spec{BoundName::lemma31, 2};
    settle_by_witness(v, c, [&] { return find_witness_collection(r, spec, wo); });
  }
  v.clauses.push_back(std::move(c));
  return v;
}

}  // namespace nonsep
