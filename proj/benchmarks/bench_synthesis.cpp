// Copyright 2026 The blockzxz Authors
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

#include <blockzxz/optimizer.hpp>
#include <blockzxz/smallgate.hpp>
#include <blockzxz/synthesis.hpp>
#include <blockzxz/zxz.hpp>

namespace {

using namespace bzxz;

void BM_Synthesize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SynthesisConfig cfg;
    cfg.level = opt_level_from_int(static_cast<int>(state.range(1)));
    cfg.verify_each_node = false;
    const ComplexMatrix u = haar_random_unitary(Eigen::Index{1} << n, 1);
    for (auto _ : state) {
        Circuit c = synthesize(u, cfg);
        benchmark::DoNotOptimize(c);
    }
    state.counters["cnots"] = static_cast<double>(expected_count(n, cfg.level));
}
BENCHMARK(BM_Synthesize)
    ->ArgsProduct({{3, 4, 5, 6}, {0, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_SynthesizeVerified(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix u = haar_random_unitary(Eigen::Index{1} << n, 2);
    for (auto _ : state) {
        Circuit c = synthesize(u);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SynthesizeVerified)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Kak3(benchmark::State& state) {
    const ComplexMatrix u = haar_random_unitary(4, 3);
    for (auto _ : state) {
        TwoQubitSynth s = kak3(u);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Kak3);

void BM_Kak2(benchmark::State& state) {
    const ComplexMatrix u = haar_random_unitary(4, 4);
    for (auto _ : state) {
        TwoQubitSynth s = kak2_up_to_diagonal(u);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Kak2);

void BM_ZxzFactors(benchmark::State& state) {
    const ComplexMatrix u = haar_random_unitary(state.range(0), 5);
    for (auto _ : state) {
        BlockZXZFactors f = compute_zxz_factors(u);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ZxzFactors)->RangeMultiplier(2)->Range(8, 128);

void BM_CircuitToUnitary(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SynthesisConfig cfg;
    cfg.verify_each_node = false;
    const Circuit c = synthesize(haar_random_unitary(Eigen::Index{1} << n, 6), cfg);
    for (auto _ : state) {
        ComplexMatrix u = circuit_to_unitary(c);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_CircuitToUnitary)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
