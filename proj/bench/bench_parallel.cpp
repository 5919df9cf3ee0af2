// Copyright 2026 The dwspots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference against the OpenMP map on the same workloads.

#include <benchmark/benchmark.h>

#include "dws/features.hpp"
#include "dws/sweeps.hpp"

namespace
{
const dws::InitialDatum& datum2()
{
    static const dws::InitialDatum d(2, {{dws::Vec::Zero(), 1.0, 1.0}, {dws::Vec(1.6, 0.5, 0.0), 0.6, 2.0}});
    return d;
}

void BM_field_grid(benchmark::State& state)
{
    const auto mode = state.range(0) ? dws::Execution::parallel : dws::Execution::serial;
    const dws::SolutionEvaluator ev(datum2());
    const auto pts = dws::tensor_grid(2, dws::Vec(-20, -20, 0), dws::Vec(20, 20, 0), {16, 16});
    for (auto _ : state) benchmark::DoNotOptimize(dws::evaluate_points(ev, pts, 50.0, {}, mode));
    state.SetItemsProcessed(state.iterations() * std::int64_t(pts.size()));
    state.counters["threads"] = mode == dws::Execution::parallel ? dws::worker_threads() : 1;
}
BENCHMARK(BM_field_grid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_certificates(benchmark::State& state)
{
    dws::CertifyOptions o;
    o.mode = state.range(0) ? dws::Execution::parallel : dws::Execution::serial;
    const dws::SolutionEvaluator ev(datum2());
    for (auto _ : state) benchmark::DoNotOptimize(dws::certify_signs(ev, 400.0, o));
}
BENCHMARK(BM_certificates)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
}  // namespace

BENCHMARK_MAIN();
