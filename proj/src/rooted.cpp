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

#include "nonsep/rooted.hpp"

#include <stdexcept>

namespace nonsep {

RootedGraph::RootedGraph(Graph g, std::vector<int> avoided, int b1, int b2)
    : RootedGraph(std::make_shared<const Graph>(std::move(g)), std::move(avoided), b1, b2) {}

RootedGraph::RootedGraph(std::shared_ptr<const Graph> g, std::vector<int> avoided, int b1, int b2)
    : graph_(std::move(g)), avoided_(std::move(avoided)), b1_(b1), b2_(b2) {
  validate();
  avoided_set_ = VertexSet::from(graph_->order(), avoided_);
  roots_ = avoided_set_;
  roots_.insert(b1_);
  roots_.insert(b2_);
}

void RootedGraph::validate() const {
  const Graph& g = *graph_;
  VertexSet seen(g.order());
  auto claim = [&](int v) {
    if (!g.is_vertex(v)) throw std::out_of_range("root " + std::to_string(v) + " outside graph");
    if (seen.contains(v)) throw std::invalid_argument("roots must be distinct (repeated " + std::to_string(v) + ")");
    seen.insert(v);
  };
  for (int a : avoided_) claim(a);
  claim(b1_);
  claim(b2_);
}

bool validate_collection(const Graph& g, const VertexSet& roots, const SCollection& c) {
  VertexSet used(g.order());
  for (const VertexSet& part : c.parts) {
    if (part.universe() != g.order() || part.empty() || part.intersects(roots)) return false;
    // Disjoint and non-adjacent to every earlier part.
    if (part.intersects(used) || g.neighborhood(part).intersects(used)) return false;
    used |= part;
  }
  return true;
}

namespace {

// Final neighbourhoods of the contracted graph, indexed by original ids.
std::vector<VertexSet> contracted_neighborhoods(const Graph& g, const VertexSet& roots, int b1, int b2,
                                                std::span<const VertexSet> parts, ContractionVariant variant,
                                                VertexSet& kept) {
  const int n = g.order();
  kept = g.vertices();
  for (const VertexSet& p : parts) kept -= p;
  std::vector<VertexSet> nb(static_cast<std::size_t>(n), VertexSet(n));
  for (int v : kept) nb[static_cast<std::size_t>(v)] = g.neighbors(v) & kept;
  for (const VertexSet& p : parts) {
    VertexSet clique = g.neighborhood(p) & kept;
    for (int v : clique) {
      nb[static_cast<std::size_t>(v)] |= clique;
      nb[static_cast<std::size_t>(v)].erase(v);
    }
  }
  if (variant == ContractionVariant::plain) return nb;
  VertexSet kept_roots = roots & kept;
  for (int v : kept_roots) {
    nb[static_cast<std::size_t>(v)] |= kept_roots;
    nb[static_cast<std::size_t>(v)].erase(v);
  }
  if (!g.adjacent(b1, b2)) {
    // Root closure skips b1b2; a neighbourhood clique may still have made it.
    bool made_by_clique = false;
    for (const VertexSet& p : parts) {
      VertexSet nbp = g.neighborhood(p);
      if (nbp.contains(b1) && nbp.contains(b2)) made_by_clique = true;
    }
    if (!made_by_clique) {
      nb[static_cast<std::size_t>(b1)].erase(b2);
      nb[static_cast<std::size_t>(b2)].erase(b1);
    }
  }
  if (variant == ContractionVariant::root_closed) return nb;
  for (int v : kept) {
    auto& s = nb[static_cast<std::size_t>(v)];
    if (roots.contains(v)) {
      s = (s & roots) | (g.neighbors(v) & kept);
    } else {
      s = (s - roots) | (g.neighbors(v) & kept_roots);
    }
  }
  return nb;
}

ContractionResult build(const Graph& g, const VertexSet& roots, int b1, int b2, const SCollection& c,
                        ContractionVariant variant) {
  VertexSet kept;
  auto nb = contracted_neighborhoods(g, roots, b1, b2, c.parts, variant, kept);
  ContractionResult out;
  out.variant = variant;
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int v : kept) {
    local[static_cast<std::size_t>(v)] = static_cast<int>(out.origin.size());
    out.origin.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.origin.size()));
  for (int v : kept)
    for (int w : nb[static_cast<std::size_t>(v)])
      if (w > v) out.graph.add_edge(local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]);
  return out;
}

}  // namespace

int contracted_edge_count(const Graph& g, const VertexSet& roots, int b1, int b2, std::span<const VertexSet> parts,
                          ContractionVariant variant) {
  VertexSet kept;
  auto nb = contracted_neighborhoods(g, roots, b1, b2, parts, variant, kept);
  int degree_sum = 0;
  for (int v : kept) degree_sum += nb[static_cast<std::size_t>(v)].count();
  return degree_sum / 2;
}

ContractionResult contract_plain(const Graph& g, const SCollection& c) {
  VertexSet roots = c.roots.universe() == g.order() ? c.roots : g.no_vertices();
  if (!validate_collection(g, roots, c)) throw std::invalid_argument("contract_plain: invalid collection");
  return build(g, roots, 0, 0, c, ContractionVariant::plain);
}

ContractionResult contract_root_closed(const RootedGraph& r, const SCollection& c) {
  if (!validate_collection(r.graph(), r.roots(), c))
    throw std::invalid_argument("contract_root_closed: not a roots-collection");
  return build(r.graph(), r.roots(), r.b1(), r.b2(), c, ContractionVariant::root_closed);
}

ContractionResult contract_restricted(const RootedGraph& r, const SCollection& c) {
  if (!validate_collection(r.graph(), r.roots(), c))
    throw std::invalid_argument("contract_restricted: not a roots-collection");
  return build(r.graph(), r.roots(), r.b1(), r.b2(), c, ContractionVariant::restricted);
}

std::string Halves::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

std::string_view to_string(BoundName b) {
  switch (b) {
    case BoundName::thm23:
      return "thm23";
    case BoundName::lemma31:
      return "lemma31";
    case BoundName::thm22:
      return "thm22";
  }
  return "?";
}

BoundName parse_bound_name(std::string_view s) {
  if (s == "thm23") return BoundName::thm23;
  if (s == "lemma31") return BoundName::lemma31;
  if (s == "thm22") return BoundName::thm22;
  throw std::invalid_argument("unknown bound '" + std::string(s) + "'");
}

int BoundSpec::neighborhood_cap() const {
  switch (name) {
    case BoundName::thm23:
      return m + 2;
    case BoundName::lemma31:
      return 4;
    case BoundName::thm22:
      return m + 1;
  }
  return 0;
}

ContractionVariant BoundSpec::measured_variant() const {
  return name == BoundName::thm22 ? ContractionVariant::root_closed : ContractionVariant::restricted;
}

Halves evaluate_bound(const BoundSpec& spec, int v) {
  if (v < 0) throw std::invalid_argument("evaluate_bound: negative order");
  const long long m = spec.m;
  const long long vv = v;
  switch (spec.name) {
    case BoundName::thm23:
      return Halves::from_doubled(2 * (m + 2) * vv - m * m - 5 * m - 8);
    case BoundName::lemma31:
      return Halves::from_doubled(8 * vv - 22);
    case BoundName::thm22:
      return Halves::from_doubled(2 * (m + 1) * vv - m * m - 3 * m - 2);
  }
  return {};
}

WitnessVerdict check_witness(const RootedGraph& r, const SCollection& c, const BoundSpec& spec) {
  const Graph& g = r.graph();
  if (!validate_collection(g, r.roots(), c)) throw std::invalid_argument("check_witness: not a roots-collection");
  WitnessVerdict out;
  out.cap = spec.neighborhood_cap();
  out.caps_ok = true;
  int removed = 0;
  for (const VertexSet& p : c.parts) {
    int size = g.neighborhood(p).count();
    out.neighborhood_sizes.push_back(size);
    if (size > out.cap) out.caps_ok = false;
    removed += p.count();
  }
  out.vertices = g.order() - removed;
  out.edges_measured = contracted_edge_count(g, r.roots(), r.b1(), r.b2(), c.parts, spec.measured_variant());
  out.threshold = evaluate_bound(spec, out.vertices);
  out.bound_ok = Halves::from_integer(out.edges_measured) <= out.threshold;
  return out;
}

}  // namespace nonsep
