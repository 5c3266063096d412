// Copyright 2026 The pinstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "pinstab/circuit.h"
#include "pinstab/magic.h"
#include "pinstab/otoc.h"
#include "pinstab/rng.h"

namespace {

using namespace pinstab;

std::vector<PauliPair> pairs_for(std::size_t n, std::size_t count) {
    Rng rng(7);
    return sample_pairs(n, count, rng);
}

void BM_MeanAbsOtocSerial(benchmark::State &state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    const OtocEvaluator eval(build_vk(10, k), OtocBackend::propagation);
    const auto pairs = pairs_for(10, 500);
    const EstimateConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(mean_abs_otoc_serial(eval, pairs, cfg, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}

void BM_MeanAbsOtocParallel(benchmark::State &state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    const OtocEvaluator eval(build_vk(10, k), OtocBackend::propagation);
    const auto pairs = pairs_for(10, 500);
    const EstimateConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(mean_abs_otoc(eval, pairs, cfg, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}

void BM_MeanAbsOtocShotsSerial(benchmark::State &state) {
    const OtocEvaluator eval(build_uk(10, 6), OtocBackend::propagation);
    const auto pairs = pairs_for(10, 500);
    const EstimateConfig cfg{.shots = static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mean_abs_otoc_serial(eval, pairs, cfg, 1));
}

void BM_MeanAbsOtocShotsParallel(benchmark::State &state) {
    const OtocEvaluator eval(build_uk(10, 6), OtocBackend::propagation);
    const auto pairs = pairs_for(10, 500);
    const EstimateConfig cfg{.shots = static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mean_abs_otoc(eval, pairs, cfg, 1));
}

void BM_ExhaustiveSerial(benchmark::State &state) {
    const OtocEvaluator eval(build_vk(3, static_cast<std::size_t>(state.range(0))), OtocBackend::dense);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_mean_abs_otoc_serial(eval));
}

void BM_ExhaustiveParallel(benchmark::State &state) {
    const OtocEvaluator eval(build_vk(3, static_cast<std::size_t>(state.range(0))), OtocBackend::dense);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_mean_abs_otoc(eval));
}

}  // namespace

BENCHMARK(BM_MeanAbsOtocSerial)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(BM_MeanAbsOtocParallel)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(BM_MeanAbsOtocShotsSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_MeanAbsOtocShotsParallel)->Arg(100)->Arg(1000);
BENCHMARK(BM_ExhaustiveSerial)->Arg(1)->Arg(3);
BENCHMARK(BM_ExhaustiveParallel)->Arg(1)->Arg(3);

BENCHMARK_MAIN();
