// SPDX-License-Identifier: Apache-2.0
//
// me-ris: rate optimization toolkit for movable-element RIS links
// Copyright (C) 2026 The me-ris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <string>

#include "meris/ao_engine.hpp"
#include "meris/harness.hpp"
#include "meris/position_opt.hpp"

using namespace meris;

namespace
{

ScenarioConfig config_for(benchmark::State &state)
{
    auto cfg = ScenarioConfig::with_wavelength(0.1);
    cfg.num_elements = static_cast<int>(state.range(0));
    cfg.region_edge = 8.0 * cfg.wavelength;
    return cfg;
}

} // namespace

static void BM_ElementwiseTerms(benchmark::State &state)
{
    const auto cfg = config_for(state);
    const auto chan = sample_realization(cfg, 1);
    const auto U = initial_positions(cfg);
    const PhaseVector q(cfg.num_elements);
    for (auto _ : state)
        benchmark::DoNotOptimize(elementwise_terms(U, q, chan, 0));
}
BENCHMARK(BM_ElementwiseTerms)->Arg(4)->Arg(16)->Arg(64);

static void BM_CalculusBundle(benchmark::State &state)
{
    const auto cfg = config_for(state);
    const auto chan = sample_realization(cfg, 1);
    const auto U = initial_positions(cfg);
    const auto terms = elementwise_terms(U, PhaseVector(cfg.num_elements), chan, 0);
    const auto decomp = phase_decomposition(chan.angles);
    for (auto _ : state)
        benchmark::DoNotOptimize(make_bundle(U[0], 0.0, terms, decomp));
}
BENCHMARK(BM_CalculusBundle)->Arg(4);

static void BM_OptimizePositions(benchmark::State &state)
{
    const auto cfg = config_for(state);
    const auto chan = sample_realization(cfg, 2);
    const auto U = initial_positions(cfg);
    const PhaseVector q(cfg.num_elements);
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_positions(U, q, chan, cfg));
}
BENCHMARK(BM_OptimizePositions)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_RunAo(benchmark::State &state)
{
    const auto cfg = config_for(state);
    const auto chan = sample_realization(cfg, 3);
    const auto method = static_cast<Method>(state.range(1));
    state.SetLabel(std::string(to_string(method)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ao(chan, cfg, method));
}
BENCHMARK(BM_RunAo)->ArgsProduct({{4, 16}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
