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

#include "nonsep/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonsep {
namespace {

/// Shortest distance from `from` to `to` through `avail` (which must contain
/// `to`), or a value above `limit` when it exceeds `limit`.
int bounded_distance(const Graph& g, const VertexSet& avail, int from, int to, int limit) {
  if (from == to) return 0;
  VertexSet seen(g.order());
  seen.insert(from);
  VertexSet frontier = seen;
  for (int d = 1; d <= limit; ++d) {
    VertexSet next(g.order());
    for (int v : frontier) next |= g.neighbors(v);
    next &= avail;
    next -= seen;
    if (next.contains(to)) return d;
    if (next.empty()) break;
    seen |= next;
    frontier = std::move(next);
  }
  return limit + 1;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, Budget& budget, const RoutePrune& prune, const RouteVisit& visit)
      : g_(g), budget_(budget), prune_(prune), visit_(visit), used_(g.order()) {}

  EnumerationStats run(const RouteQuery& q) {
    switch (q.shape) {
      case RouteShape::path: run_path(q); break;
      case RouteShape::two_paths: run_two_paths(q); break;
      case RouteShape::cycle_through_edge: run_edge_cycle(q); break;
      case RouteShape::cycle_through_edges: run_two_edge_cycle(q); break;
    }
    stats_.end = budget_.exhausted() ? EnumerationEnd::budget_exhausted
                 : stopped_          ? EnumerationEnd::stopped
                                     : EnumerationEnd::exhausted;
    return stats_;
  }

 private:
  bool halted() const { return stopped_ || budget_.exhausted(); }

  // Enumerates simple paths from the last vertex of `path` to `target` with
  // exactly `remaining` more edges inside `avail`; vertices of the growing
  // path are recorded in used_. Calls `done` for each completed path.
  template <typename Done>
  void extend(std::vector<int>& path, int target, int remaining, VertexSet& avail, const Done& done) {
    if (halted()) return;
    if (budget_.tick()) return;
    const int cur = path.back();
    if (remaining == 0) {
      if (cur == target) done(path);
      return;
    }
    if (cur == target) return;
    if (bounded_distance(g_, avail, cur, target, remaining) > remaining) return;
    VertexSet cand = g_.neighbors(cur) & avail;
    for (int w : cand) {
      if (w == target && remaining != 1) continue;
      path.push_back(w);
      avail.erase(w);
      const bool fresh = !used_.contains(w);
      used_.insert(w);
      if (!prune_ || prune_(used_)) extend(path, target, remaining - 1, avail, done);
      if (fresh) used_.erase(w);
      avail.insert(w);
      path.pop_back();
      if (halted()) return;
    }
  }

  // Runs `extend` for a whole segment from `from` to `to`, handling the
  // bookkeeping of the start vertex.
  template <typename Done>
  void segment(int from, int to, int length, VertexSet avail, const Done& done) {
    if (halted()) return;
    if (!avail.contains(to)) return;
    std::vector<int> path{from};
    avail.erase(from);
    const bool fresh = !used_.contains(from);
    used_.insert(from);
    if (!prune_ || prune_(used_)) extend(path, to, length, avail, done);
    if (fresh) used_.erase(from);
  }

  void emit(Route route) {
    route.vertices = used_;
    ++stats_.routes;
    if (visit_(route)) stopped_ = true;
  }

  void run_path(const RouteQuery& q) {
    const int max_len = q.allowed.count() - 1;
    for (int len = 1; len <= max_len && !halted(); ++len) {
      segment(q.s, q.t, len, q.allowed, [&](const std::vector<int>& p) {
        Route r;
        r.segments = {p};
        r.total_length = len;
        emit(std::move(r));
      });
    }
  }

  void run_two_paths(const RouteQuery& q) {
    const int max_len = q.allowed.count();
    for (int total = 3; total <= max_len && !halted(); ++total) {
      for (int l1 = 1; 2 * l1 <= total && !halted(); ++l1) {
        const int l2 = total - l1;
        segment(q.s, q.t, l1, q.allowed, [&](const std::vector<int>& p1) {
          VertexSet avail = q.allowed - used_;
          avail.insert(q.s);
          avail.insert(q.t);
          segment(q.s, q.t, l2, avail, [&](const std::vector<int>& p2) {
            if (l1 == l2 && !std::lexicographical_compare(p1.begin(), p1.end(), p2.begin(), p2.end())) return;
            Route r;
            r.segments = {p1, p2};
            r.cycle = p1;
            for (auto it = p2.rbegin() + 1; it + 1 != p2.rend(); ++it) r.cycle.push_back(*it);
            r.total_length = total;
            emit(std::move(r));
          });
        });
      }
    }
  }

  // A single arc closing one required edge s-t, or the two adjacent edges
  // x-y-v (arc v..x avoiding y).
  void run_single_arc(int from, int to, int min_len, const VertexSet& allowed, const std::vector<int>& prefix) {
    for (int v : prefix) used_.insert(v);
    VertexSet avail = allowed;
    for (int v : prefix) avail.erase(v);
    avail.insert(from);
    const int max_len = avail.count() - 1;
    for (int len = min_len; len <= max_len && !halted(); ++len) {
      segment(from, to, len, avail, [&](const std::vector<int>& p) {
        Route r;
        r.segments = {p};
        r.cycle = prefix;
        r.cycle.insert(r.cycle.end(), p.begin(), p.end());
        r.total_length = len;
        emit(std::move(r));
      });
    }
    for (int v : prefix) used_.erase(v);
  }

  void run_edge_cycle(const RouteQuery& q) {
    if (q.required.size() != 1) throw std::invalid_argument("cycle_through_edge needs one edge");
    const Edge e = q.required[0];
    run_single_arc(e.u, e.v, 2, q.allowed, {});
  }

  void run_two_edge_cycle(const RouteQuery& q) {
    if (q.required.size() != 2) throw std::invalid_argument("cycle_through_edges needs two edges");
    const Edge e1 = q.required[0];
    const Edge e2 = q.required[1];
    if (e1.shares_vertex(e2)) {
      const int y = e2.touches(e1.u) ? e1.u : e1.v;
      const int x = e1.u == y ? e1.v : e1.u;
      const int v = e2.u == y ? e2.v : e2.u;
      run_single_arc(v, x, 1, q.allowed, {y});
      return;
    }
    const int x1 = e1.u;
    const int y1 = e1.v;
    const int max_len = q.allowed.count() - 2;
    const std::pair<int, int> pairings[2] = {{e2.u, e2.v}, {e2.v, e2.u}};
    for (int total = 2; total <= max_len && !halted(); ++total) {
      for (int l1 = 1; l1 < total && !halted(); ++l1) {
        for (auto [p, qv] : pairings) {
          if (halted()) break;
          used_.insert(x1);
          used_.insert(qv);
          VertexSet avail = q.allowed;
          avail.erase(x1);
          avail.erase(qv);
          segment(y1, p, l1, avail, [&](const std::vector<int>& arc1) {
            VertexSet avail2 = q.allowed - used_;
            avail2.insert(x1);
            avail2.insert(qv);
            segment(qv, x1, total - l1, avail2, [&](const std::vector<int>& arc2) {
              Route r;
              r.segments = {arc1, arc2};
              r.cycle = arc1;
              r.cycle.insert(r.cycle.end(), arc2.begin(), arc2.end());
              r.total_length = total;
              emit(std::move(r));
            });
          });
          used_.erase(x1);
          used_.erase(qv);
        }
      }
    }
  }

  const Graph& g_;
  Budget& budget_;
  const RoutePrune& prune_;
  const RouteVisit& visit_;
  VertexSet used_;
  EnumerationStats stats_;
  bool stopped_ = false;
};

}  // namespace

EnumerationStats enumerate_routes(const Graph& g, const RouteQuery& query, Budget& budget, const RoutePrune& prune,
                                  const RouteVisit& visit) {
  if (query.allowed.universe() != g.order()) throw std::invalid_argument("allowed set has the wrong universe");
  auto check_vertex = [&](int v) {
    if (!g.is_vertex(v) || !query.allowed.contains(v)) throw std::invalid_argument("route endpoint outside allowed set");
  };
  switch (query.shape) {
    case RouteShape::path:
    case RouteShape::two_paths:
      check_vertex(query.s);
      check_vertex(query.t);
      if (query.s == query.t) throw std::invalid_argument("route endpoints must differ");
      break;
    case RouteShape::cycle_through_edge:
    case RouteShape::cycle_through_edges:
      for (const Edge& e : query.required) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("required edge not in graph");
      }
      if (query.required.size() == 2 && query.required[0] == query.required[1])
        throw std::invalid_argument("required edges must differ");
      break;
  }
  Enumerator en(g, budget, prune, visit);
  return en.run(query);
}

}  // namespace nonsep
