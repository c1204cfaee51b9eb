// Copyright 2026 The superrad Authors
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

#include <benchmark/benchmark.h>

#include "superrad/ensemble.hpp"
#include "superrad/liouvillian.hpp"

namespace {

using namespace superrad;

CouplingSet sample_couplings(std::size_t n) {
    return build_couplings(sample_configuration(n, 0.67, 7), Regime::exact);
}

void BM_Assemble(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const CouplingSet couplings = sample_couplings(n);
    for (auto _ : state) benchmark::DoNotOptimize(assemble(couplings, n));
}
BENCHMARK(BM_Assemble)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_StepPropagator(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Propagator prop(assemble(sample_couplings(n), n), n);
    for (auto _ : state) benchmark::DoNotOptimize(prop.step_propagator(0.005));
}
BENCHMARK(BM_StepPropagator)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_Realization(benchmark::State& state) {
    EnsembleSpec spec;
    spec.n_atoms = static_cast<std::size_t>(state.range(0));
    spec.k0R = 0.67;
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_realization(spec, k++));
}
BENCHMARK(BM_Realization)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SubradiantRealization(benchmark::State& state) {
    EnsembleSpec spec;
    spec.initial = InitialState::subradiant;
    spec.grid = TimeGrid::subradiance_default();
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_realization(spec, k++));
}
BENCHMARK(BM_SubradiantRealization)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
    EnsembleSpec spec;
    spec.n_samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(spec, {1, 16}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ensemble)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
