// aerolink - link statistics for RIS-assisted UAV relaying under channel aging
// Copyright (C) 2026 The aerolink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aerolink/mc_oracle.hpp"
#include "aerolink/scenario.hpp"

#include <benchmark/benchmark.h>

namespace
{
    using namespace aerolink;

    LinkSet default_links()
    {
        Scenario s = default_scenario();
        return build_links(s);
    }

    void BM_g2a(benchmark::State &state, Execution ex)
    {
        const LinkSet links = default_links();
        for (auto _ : state)
            benchmark::DoNotOptimize(sim_g2a(links.g2a, state.range(0), 7, ex).samples.data());
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    void BM_a2g(benchmark::State &state, Execution ex)
    {
        const LinkSet links = default_links();
        const PscConfig psc{};
        for (auto _ : state)
            benchmark::DoNotOptimize(sim_a2g(links.a2g, psc, state.range(0), 7, ex).samples.data());
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }
}

BENCHMARK_CAPTURE(BM_g2a, serial, aerolink::Execution::Serial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_g2a, openmp, aerolink::Execution::Parallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_a2g, serial, aerolink::Execution::Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_a2g, openmp, aerolink::Execution::Parallel)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
