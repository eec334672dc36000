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

// Serial reference (threads = 1) against the OpenMP pool (threads = 0) for
// the exhaustive sweep and the campaign runner, plus single oracle calls.

#include <benchmark/benchmark.h>

#include "nonsep/campaign.hpp"
#include "nonsep/generate.hpp"
#include "nonsep/oracle.hpp"

namespace {

using namespace nonsep;

void BM_SweepThm23(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SweepReport rep = run_sweep("T2.3", 1, {4, 5, threads, 20});
    benchmark::DoNotOptimize(rep.rooted);
  }
  state.SetLabel(threads == 1 ? "serial" : "pool");
}
BENCHMARK(BM_SweepThm23)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_CampaignT13(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  InstanceSpec src;
  src.count = 20;
  src.seed = 7;
  CampaignOptions opts;
  opts.threads = threads;
  for (auto _ : state) {
    const CampaignReport rep = run_campaign(theorem_spec("T1.3-k1", 1), src, opts);
    benchmark::DoNotOptimize(rep.pass);
  }
  state.SetLabel(threads == 1 ? "serial" : "pool");
}
BENCHMARK(BM_CampaignT13)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_OracleKPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = gen_random(n, 8, 3);
  const VertexSet avoided(n, {n - 1});
  for (auto _ : state) {
    const SearchOutcome out = find_k_paths_with_residual(g, avoided, 0, 1, 2, 2);
    benchmark::DoNotOptimize(out.status);
  }
}
BENCHMARK(BM_OracleKPaths)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = gen_random(static_cast<int>(state.range(0)), 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
