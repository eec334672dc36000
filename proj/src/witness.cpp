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

#include "nonsep/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nonsep/graph_io.hpp"
#include "nonsep/planarity.hpp"

namespace nonsep {
namespace {

/// Set partitions of {0..c-1} into at most k blocks as restricted growth
/// strings, most blocks first, then lexicographic.
const std::vector<std::vector<int>>& partitions(int c, int k) {
  thread_local std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  auto key = std::make_pair(c, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<std::size_t>(c), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == c) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (c > 0) rec(rec, 0, 0);
  auto blocks_of = [](const std::vector<int>& r) { return r.empty() ? 0 : *std::max_element(r.begin(), r.end()) + 1; };
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& a, const auto& b) { return blocks_of(a) > blocks_of(b); });
  return cache.emplace(key, std::move(out)).first->second;
}

/// Groups `comps` by the restricted growth string over the chosen subset.
std::vector<VertexSet> assemble(const std::vector<VertexSet>& comps, const std::vector<int>& chosen,
                                const std::vector<int>& rgs, int universe) {
  int blocks = 0;
  for (int b : rgs) blocks = std::max(blocks, b + 1);
  std::vector<VertexSet> parts(static_cast<std::size_t>(blocks), VertexSet(universe));
  for (std::size_t i = 0; i < chosen.size(); ++i)
    parts[static_cast<std::size_t>(rgs[i])] |= comps[static_cast<std::size_t>(chosen[i])];
  return parts;
}

EnumerationStats exhaustive(const Graph& g, const VertexSet& roots, const WitnessOptions& opts, Budget& budget,
                            const CollectionVisit& visit) {
  if (g.order() > opts.vertex_cap)
    throw std::invalid_argument("exhaustive witness search is capped at " + std::to_string(opts.vertex_cap) +
                                " vertices");
  EnumerationStats stats;
  const std::vector<int> free = (g.vertices() - roots).to_vector();
  const int r = static_cast<int>(free.size());
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  for (std::uint32_t mask : masks) {
    VertexSet u(g.order());
    for (int i = 0; i < r; ++i)
      if (mask & (1U << i)) u.insert(free[static_cast<std::size_t>(i)]);
    const std::vector<VertexSet> comps = components(g, u);
    std::vector<int> chosen(comps.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = static_cast<int>(i);
    for (const auto& rgs : partitions(static_cast<int>(comps.size()), opts.max_parts)) {
      if (budget.tick()) {
        stats.end = EnumerationEnd::budget_exhausted;
        return stats;
      }
      const auto parts = assemble(comps, chosen, rgs, g.order());
      ++stats.routes;
      if (visit(parts)) {
        stats.end = EnumerationEnd::stopped;
        return stats;
      }
    }
  }
  ++stats.routes;
  stats.end = visit({}) ? EnumerationEnd::stopped : EnumerationEnd::exhausted;
  return stats;
}

EnumerationStats separator_guided(const Graph& g, const VertexSet& roots, const WitnessOptions& opts, Budget& budget,
                                  const CollectionVisit& visit) {
  constexpr int kSubsetLimit = 8;
  EnumerationStats stats;
  const std::vector<int> free = (g.vertices() - roots).to_vector();
  const int r = static_cast<int>(free.size());
  const int cap = std::min(std::max(opts.separator_cap, 0), r);
  const int max_parts = std::min(opts.max_parts, 2);
  std::set<std::vector<std::vector<int>>> seen;

  auto offer = [&](std::vector<VertexSet> parts) {
    std::vector<std::vector<int>> key;
    for (const auto& p : parts) key.push_back(p.to_vector());
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return false;
    ++stats.routes;
    return visit(parts);
  };

  std::vector<int> pick;
  auto over_separators = [&](auto&& self, int start, int left) -> bool {
    if (budget.tick()) return true;
    VertexSet rest = g.vertices() - roots;
    for (int i : pick) rest.erase(free[static_cast<std::size_t>(i)]);
    const std::vector<VertexSet> comps = components(g, rest);
    const int c = static_cast<int>(comps.size());
    if (c <= kSubsetLimit) {
      for (std::uint32_t sub = 1; sub < (1U << c); ++sub) {
        std::vector<int> chosen;
        for (int i = 0; i < c; ++i)
          if (sub & (1U << i)) chosen.push_back(i);
        for (const auto& rgs : partitions(static_cast<int>(chosen.size()), max_parts)) {
          if (budget.tick()) return true;
          if (offer(assemble(comps, chosen, rgs, g.order()))) return true;
        }
      }
    } else {
      std::vector<int> all(comps.size());
      for (int i = 0; i < c; ++i) all[static_cast<std::size_t>(i)] = i;
      if (offer(assemble(comps, all, std::vector<int>(all.size(), 0), g.order()))) return true;
      for (int i = 0; i < c; ++i)
        if (offer({comps[static_cast<std::size_t>(i)]})) return true;
    }
    if (left == 0) return false;
    for (int i = start; i < r; ++i) {
      pick.push_back(i);
      const bool stop = self(self, i + 1, left - 1);
      pick.pop_back();
      if (stop) return true;
    }
    return false;
  };
  if (over_separators(over_separators, 0, cap)) {
    stats.end = budget.exhausted() ? EnumerationEnd::budget_exhausted : EnumerationEnd::stopped;
    return stats;
  }
  stats.end = offer({}) ? EnumerationEnd::stopped : EnumerationEnd::exhausted;
  return stats;
}

SearchStatus status_of(EnumerationEnd end) {
  switch (end) {
    case EnumerationEnd::stopped:
      return SearchStatus::found;
    case EnumerationEnd::budget_exhausted:
      return SearchStatus::budget_exhausted;
    case EnumerationEnd::exhausted:
      return SearchStatus::absent;
  }
  return SearchStatus::absent;
}

Certificate base(const RootedGraph& r) {
  Certificate c;
  c.kind = CertificateKind::witness;
  c.avoided = r.avoided();
  c.terminals = {r.b1(), r.b2()};
  c.graph_hash = graph_hash(r.graph());
  c.engine = "oracle";
  return c;
}

}  // namespace

EnumerationStats enumerate_collections(const Graph& g, const VertexSet& roots, const WitnessOptions& opts,
                                       const CollectionVisit& visit) {
  if (opts.max_parts < 1) throw std::invalid_argument("max_parts must be positive");
  Budget local;
  Budget& budget = opts.budget ? *opts.budget : local;
  if (opts.mode == WitnessMode::exhaustive) return exhaustive(g, roots, opts, budget, visit);
  return separator_guided(g, roots, opts, budget, visit);
}

Certificate witness_certificate(const RootedGraph& r, std::span<const VertexSet> parts, const BoundSpec& spec) {
  SCollection c{std::vector<VertexSet>(parts.begin(), parts.end()), r.roots()};
  const WitnessVerdict v = check_witness(r, c, spec);
  Certificate cert = base(r);
  for (const VertexSet& p : parts) cert.parts.push_back(p.to_vector());
  cert.bound = std::string(to_string(spec.name));
  cert.cap_limit = v.cap;
  cert.caps = v.neighborhood_sizes;
  cert.edges_measured = v.edges_measured;
  cert.threshold_doubled = v.threshold.doubled();
  cert.pass = v.pass();
  return cert;
}

SearchOutcome find_witness_collection(const RootedGraph& r, const BoundSpec& spec, const WitnessOptions& opts) {
  const Graph& g = r.graph();
  const int cap = spec.neighborhood_cap();
  WitnessOptions o = opts;
  if (o.separator_cap < 0) o.separator_cap = cap;
  SearchOutcome out;
  const auto stats = enumerate_collections(g, r.roots(), o, [&](std::span<const VertexSet> parts) {
    int removed = 0;
    for (const VertexSet& p : parts) {
      if (g.neighborhood(p).count() > cap) return false;
      removed += p.count();
    }
    const int e = contracted_edge_count(g, r.roots(), r.b1(), r.b2(), parts, spec.measured_variant());
    if (Halves::from_integer(e) > evaluate_bound(spec, g.order() - removed)) return false;
    out.certificate = witness_certificate(r, parts, spec);
    return true;
  });
  out.status = status_of(stats.end);
  out.routes_examined = stats.routes;
  if (!out.found()) out.certificate.reset();
  return out;
}

SearchOutcome find_planar_collection(const RootedGraph& r, const WitnessOptions& opts) {
  if (r.m() != 2) throw std::invalid_argument("planar collections need m = 2");
  const Graph& g = r.graph();
  const std::vector<int> boundary = {r.avoided()[0], r.b1(), r.avoided()[1], r.b2()};
  WitnessOptions o = opts;
  if (o.separator_cap < 0) o.separator_cap = 3;
  SearchOutcome out;
  const auto stats = enumerate_collections(g, r.roots(), o, [&](std::span<const VertexSet> parts) {
    std::vector<int> caps;
    for (const VertexSet& p : parts) {
      caps.push_back(g.neighborhood(p).count());
      if (caps.back() > 3) return false;
    }
    SCollection c{std::vector<VertexSet>(parts.begin(), parts.end()), r.roots()};
    const ContractionResult h = contract_plain(g, c);
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < h.origin.size(); ++i) local[static_cast<std::size_t>(h.origin[i])] = static_cast<int>(i);
    std::vector<int> mapped;
    for (int v : boundary) mapped.push_back(local[static_cast<std::size_t>(v)]);
    if (!is_disc_planar(h.graph, mapped)) return false;
    Certificate cert = base(r);
    for (const VertexSet& p : parts) cert.parts.push_back(p.to_vector());
    cert.bound = "seymour";
    cert.cap_limit = 3;
    cert.caps = caps;
    cert.edges_measured = h.graph.size();
    cert.boundary = boundary;
    cert.pass = true;
    out.certificate = std::move(cert);
    return true;
  });
  out.status = status_of(stats.end);
  out.routes_examined = stats.routes;
  if (!out.found()) out.certificate.reset();
  return out;
}

}  // namespace nonsep
