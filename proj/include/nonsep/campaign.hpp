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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nonsep/certificate.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

/// What a campaign asks of every host.
enum class Goal {
  k_paths,           // k internally disjoint s-t paths, residual at `level`
  cycle_edges,       // cycle through `edges` required edges, residual at `level`
  two_feasible,      // b1-b2 path leaving A in one block
  cycle_22,          // cycle through b1, b2 leaving A in one block
  cycle_edges_comp,  // cycle through two edges leaving A in one component
  dichotomy,         // exhaustive small-n sweep of a dichotomy
};

struct TheoremSpec {
  std::string id;  // T1.3-k1, T1.3-k2, T1.4, T1.5, C2.4-i, C2.4-ii, C2.5, T2.3, T2.1, L3.1, g-m-1, L4.1
  int m = 1;
  Goal goal = Goal::k_paths;
  int k = 1;       // paths (k_paths) or required edges (cycle goals)
  int level = 2;   // residual level for level-based goals
  bool local_supported = false;

  /// Connectivity the theorem assumes, as a function of m.
  int threshold() const;
  /// Default n range used when the source does not set one.
  int default_n_min() const;
  int default_n_max() const;
};

/// Throws std::invalid_argument for unknown ids or m out of range.
TheoremSpec theorem_spec(const std::string& id, int m);
const std::vector<std::string>& theorem_ids();

/// Where campaign hosts come from. Families: random, complete, circulant.
struct InstanceSpec {
  std::string family = "random";
  int n_min = -1;  // -1: the theorem's default range
  int n_max = -1;
  int kappa_min = -1;  // -1: the theorem's threshold
  std::uint64_t seed = 1;
  int count = 10;
};

enum class Engine { oracle, local, both };
std::string_view to_string(Engine e);
Engine parse_engine(std::string_view s);

struct CampaignOptions {
  Engine engine = Engine::oracle;
  bool fallback_oracle = false;  // a local stall is rescued by the oracle instead of failing
  std::chrono::milliseconds budget{60000};  // per instance
  int threads = 0;  // 0: every available thread, capped by NONSEP_THREADS; 1: serial
};

/// {family, n, kappa_min, seed, roots}. The host is gen_random(n, kappa_min,
/// seed) (or the named family) and roots come from Rng(Rng::derive(seed, 2)).
struct Manifest {
  std::string family;
  int n = 0;
  int kappa_min = 0;
  std::uint64_t seed = 0;
  std::vector<int> avoided;
  std::vector<int> terminals;
  std::vector<Edge> edges;
};

nlohmann::json to_json(const Manifest& m);

struct InstanceResult {
  Manifest manifest;
  std::string verdict;  // pass, fallback, absent, stalled, no-route, budget-exhausted, verify-failed, disagree
  bool pass = false;
  std::optional<Certificate> certificate;
  long long millis = 0;
  nlohmann::json details = nlohmann::json::object();
};

struct CampaignReport {
  TheoremSpec spec;
  InstanceSpec source;
  CampaignOptions options;
  std::vector<InstanceResult> instances;
  bool pass = false;

  nlohmann::json summary() const;
  /// {spec, instances: [{manifest, verdict, cert_ref, millis}], certificates, summary}
  nlohmann::json to_json() const;
};

/// Validates the combination first (std::invalid_argument when the floor
/// is below the threshold, the id is a sweep, or the engine is unavailable),
/// then runs every instance. Results are in instance order.
CampaignReport run_campaign(const TheoremSpec& spec, const InstanceSpec& source, const CampaignOptions& opts = {});

/// Builds instance `index` of a campaign without running it.
Manifest campaign_manifest(const TheoremSpec& spec, const InstanceSpec& source, int index);
Graph manifest_graph(const Manifest& m);

/// Exhaustive sweep over all labeled graphs with n in [n_min, n_max] and
/// every root choice (terminal pairs and avoided sets taken unordered).
struct SweepOptions {
  int n_min = 0;
  int n_max = 0;
  int threads = 0;
  int max_examples = 20;  // counterexamples and undecided instances kept
};

struct SweepExample {
  int n = 0;
  std::uint64_t mask = 0;
  std::vector<int> avoided;
  int b1 = -1;
  int b2 = -1;
  std::string verdict;
};

struct SweepReport {
  std::string id;
  int m = 0;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t graphs = 0;
  std::uint64_t rooted = 0;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  std::uint64_t witness = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t undecided = 0;
  std::uint64_t strict_failures = 0;     // alternative block convention
  std::uint64_t literal_22_failures = 0;  // literal two-blocks reading
  std::vector<SweepExample> examples;
  long long millis = 0;

  bool pass() const { return counterexamples == 0 && undecided == 0; }
  nlohmann::json to_json() const;
};

/// id is T2.3 (m in {0, 1, ...}), T2.1 (m = 2) or L3.1 (m = 2).
SweepReport run_sweep(const std::string& id, int m, const SweepOptions& opts);

/// Threads for parallel loops: requested (0 = all), capped by NONSEP_THREADS.
int pool_threads(int requested);

}  // namespace nonsep
