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

#include "nonsep/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace nonsep {
namespace {

struct Arc {
  int to;
  int cap;
  int cost;
};

// Split network: vertex v becomes in=2v, out=2v+1; super source/sink last.
class Network {
 public:
  explicit Network(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, int cap, int cost) {
    out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, cost});
    out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, -cost});
  }

  // One unit along a residual path found by `order`; false if none.
  bool augment(int source, int sink, AugmentOrder order) {
    const std::size_t n = out_.size();
    std::vector<int> via(n, -1);
    std::vector<char> seen(n, 0);
    bool found = false;
    switch (order) {
      case AugmentOrder::shortest: {
        std::deque<int> queue{source};
        seen[static_cast<std::size_t>(source)] = 1;
        while (!queue.empty() && !found) {
          int x = queue.front();
          queue.pop_front();
          for (int a : out_[static_cast<std::size_t>(x)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap <= 0 || seen[static_cast<std::size_t>(arc.to)]) continue;
            seen[static_cast<std::size_t>(arc.to)] = 1;
            via[static_cast<std::size_t>(arc.to)] = a;
            if (arc.to == sink) {
              found = true;
              break;
            }
            queue.push_back(arc.to);
          }
        }
        break;
      }
      case AugmentOrder::depth_first: {
        // Iterative DFS; arcs are scanned in insertion order (neighbour id).
        std::vector<std::size_t> cursor(n, 0);
        std::vector<int> stack{source};
        seen[static_cast<std::size_t>(source)] = 1;
        while (!stack.empty() && !found) {
          int x = stack.back();
          auto& c = cursor[static_cast<std::size_t>(x)];
          const auto& list = out_[static_cast<std::size_t>(x)];
          bool pushed = false;
          while (c < list.size()) {
            int a = list[c++];
            const Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap <= 0 || seen[static_cast<std::size_t>(arc.to)]) continue;
            seen[static_cast<std::size_t>(arc.to)] = 1;
            via[static_cast<std::size_t>(arc.to)] = a;
            if (arc.to == sink) {
              found = true;
            } else {
              stack.push_back(arc.to);
            }
            pushed = true;
            break;
          }
          if (!pushed) stack.pop_back();
        }
        break;
      }
      case AugmentOrder::min_cost: {
        // Bellman-Ford (queue based); residual costs may be negative.
        constexpr int kInf = std::numeric_limits<int>::max() / 4;
        std::vector<int> dist(n, kInf);
        std::vector<char> queued(n, 0);
        std::deque<int> queue{source};
        dist[static_cast<std::size_t>(source)] = 0;
        queued[static_cast<std::size_t>(source)] = 1;
        while (!queue.empty()) {
          int x = queue.front();
          queue.pop_front();
          queued[static_cast<std::size_t>(x)] = 0;
          for (int a : out_[static_cast<std::size_t>(x)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap <= 0) continue;
            int nd = dist[static_cast<std::size_t>(x)] + arc.cost;
            if (nd < dist[static_cast<std::size_t>(arc.to)]) {
              dist[static_cast<std::size_t>(arc.to)] = nd;
              via[static_cast<std::size_t>(arc.to)] = a;
              if (!queued[static_cast<std::size_t>(arc.to)]) {
                queued[static_cast<std::size_t>(arc.to)] = 1;
                queue.push_back(arc.to);
              }
            }
          }
        }
        found = dist[static_cast<std::size_t>(sink)] < kInf;
        break;
      }
    }
    if (!found) return false;
    for (int x = sink; x != source;) {
      int a = via[static_cast<std::size_t>(x)];
      arcs_[static_cast<std::size_t>(a)].cap -= 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
      x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

  // Net flow on forward arc a (forward arcs have even index).
  int flow(int a) const { return arcs_[static_cast<std::size_t>(a ^ 1)].cap; }
  const std::vector<int>& arcs_from(int x) const { return out_[static_cast<std::size_t>(x)]; }
  const Arc& arc(int a) const { return arcs_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
};

}  // namespace

Routing route_paths(const Graph& g, const RoutingProblem& problem) {
  const int n = g.order();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  Network net(2 * n + 2);

  std::vector<int> vertex_cap(static_cast<std::size_t>(n), 1);
  for (const auto& t : problem.sources) {
    if (!problem.allowed.contains(t.vertex)) throw std::invalid_argument("source outside allowed set");
    vertex_cap[static_cast<std::size_t>(t.vertex)] = std::max(vertex_cap[static_cast<std::size_t>(t.vertex)], t.capacity);
  }
  for (const auto& t : problem.sinks) {
    if (!problem.allowed.contains(t.vertex)) throw std::invalid_argument("sink outside allowed set");
    vertex_cap[static_cast<std::size_t>(t.vertex)] = std::max(vertex_cap[static_cast<std::size_t>(t.vertex)], t.capacity);
  }
  for (const auto& t : problem.sources) net.add_arc(source, 2 * t.vertex, t.capacity, 0);
  for (int v : problem.allowed) {
    net.add_arc(2 * v, 2 * v + 1, vertex_cap[static_cast<std::size_t>(v)], 0);
    for (int w : g.neighbors(v)) {
      if (!problem.allowed.contains(w)) continue;
      bool excluded = false;
      for (const Edge& e : problem.excluded_edges)
        if (e == Edge{v, w}) excluded = true;
      if (!excluded) net.add_arc(2 * v + 1, 2 * w, 1, 1);
    }
  }
  for (const auto& t : problem.sinks) net.add_arc(2 * t.vertex + 1, sink, t.capacity, 0);

  Routing result;
  while (result.value < problem.demand && net.augment(source, sink, problem.order)) ++result.value;

  // Decompose: walk used arcs from the super source, consuming flow.
  std::vector<std::vector<int>> remaining(static_cast<std::size_t>(2 * n + 2));
  std::vector<int> flow_left;
  {
    std::size_t arcs = 0;
    for (int x = 0; x < 2 * n + 2; ++x)
      for (int a : net.arcs_from(x)) arcs = std::max(arcs, static_cast<std::size_t>(a) + 2);
    flow_left.assign(arcs, 0);
    for (int x = 0; x < 2 * n + 2; ++x)
      for (int a : net.arcs_from(x))
        if (a % 2 == 0 && net.flow(a) > 0) {
          flow_left[static_cast<std::size_t>(a)] = net.flow(a);
          remaining[static_cast<std::size_t>(x)].push_back(a);
        }
  }
  for (int unit = 0; unit < result.value; ++unit) {
    Path p;
    int x = source;
    while (x != sink) {
      int chosen = -1;
      for (int a : remaining[static_cast<std::size_t>(x)])
        if (flow_left[static_cast<std::size_t>(a)] > 0) {
          chosen = a;
          break;
        }
      if (chosen < 0) throw std::logic_error("flow decomposition failed");
      flow_left[static_cast<std::size_t>(chosen)] -= 1;
      x = net.arc(chosen).to;
      if (x < 2 * n && x % 2 == 0) p.vertices.push_back(x / 2);
    }
    result.paths.push_back(std::move(p));
  }
  std::sort(result.paths.begin(), result.paths.end(), [](const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices < b.vertices;
  });
  return result;
}

}  // namespace nonsep
