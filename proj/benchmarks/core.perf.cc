// Copyright 2026 The imprecise-q Authors
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

#include <benchmark/benchmark.h>

#include "impq/css_code.h"
#include "impq/gates.h"
#include "impq/qft.h"
#include "impq/shor.h"
#include "impq/sk_model.h"

namespace {

using namespace impq;

void BM_apply_1q(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    StateVector s = init_register(n);
    const UnitaryGate h = make_faulty_1q(GateKind::H, 1e-3);
    int q = 1;
    for (auto _ : state) {
        apply_gate(s, h, {q});
        q = q % n + 1;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_apply_1q)->Arg(10)->Arg(16)->Arg(20);

void BM_apply_cnot(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    StateVector s = init_register(n);
    const UnitaryGate cx = make_faulty_cnot(1e-3, -2e-3);
    for (auto _ : state) {
        apply_gate(s, cx, {1, n});
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_apply_cnot)->Arg(10)->Arg(16)->Arg(20);

void BM_qft(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    StateVector s = prepare_periodic({n, 4, 1});
    for (auto _ : state) {
        qft(s);
    }
}
BENCHMARK(BM_qft)->Arg(10)->Arg(16)->Arg(20);

void BM_ec_cycle(benchmark::State &state) {
    NoiseSource noise(NoiseSpec::uniform(1e-5, 1), 0);
    Rng rng(1);
    StateVector s = css::prepare_logical_zero(noise);
    for (auto _ : state) {
        css::logical_not(s, noise);
        benchmark::DoNotOptimize(css::ec_cycle(s, noise, rng));
    }
}
BENCHMARK(BM_ec_cycle);

void BM_shor_trial(benchmark::State &state) {
    shor::ShorOptions options;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(shor::run_shor_trial(21, 9, {0.01}, 3, trial++, options));
    }
}
BENCHMARK(BM_shor_trial);

void BM_sk_optimum(benchmark::State &state) {
    const sk::SKParams params{1e-4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sk::sk_optimal_precision(params));
    }
}
BENCHMARK(BM_sk_optimum);

}  // namespace

BENCHMARK_MAIN();
