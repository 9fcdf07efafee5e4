// Copyright 2026 The qecdist Authors
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

#include "qecdist/gates.hpp"
#include "qecdist/harness.hpp"
#include "qecdist/metrics.hpp"
#include "qecdist/rng.hpp"

namespace {

using namespace qecdist;

void bm_single_axis(benchmark::State &st) {
    StateVector s(static_cast<std::size_t>(st.range(0)));
    GateSpec g = hadamard_w(3);
    for (auto _ : st) {
        apply_generated_unitary(s, g, 0.3);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(bm_single_axis)->Arg(10)->Arg(11);

void bm_controlled(benchmark::State &st) {
    StateVector s(static_cast<std::size_t>(st.range(0)));
    GateSpec g = cnot(8, 2);
    for (auto _ : st) {
        apply_generated_unitary(s, g, 0.3);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(bm_controlled)->Arg(10)->Arg(11);

void bm_measure_reset(benchmark::State &st) {
    StateVector s(11);
    for (auto _ : st) {
        measure_qubit(s, 9, 0.5);
        reset_qubit(s, 9);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(bm_measure_reset);

void bm_philox(benchmark::State &st) {
    RngStream r(42, 7);
    for (auto _ : st) {
        benchmark::DoNotOptimize(r.uniform());
    }
}
BENCHMARK(bm_philox);

void bm_psi_basis(benchmark::State &st) {
    CodeId code = st.range(0) == 0 ? CodeId::Steane : CodeId::Surface17;
    const CodeLayout &layout = layout_for(code);
    StateVector data = layout.encoded_data_state({0.6, 0.0}, {0.0, 0.8});
    for (auto _ : st) {
        auto b = build_psi_subspace(data, layout, SubspaceLevel::Psi1);
        benchmark::DoNotOptimize(b.kets.data());
    }
}
BENCHMARK(bm_psi_basis)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void bm_trial(benchmark::State &st) {
    ExperimentConfig c;
    c.code = st.range(0) == 0 ? CodeId::Steane : CodeId::Surface17;
    c.noise = NoiseModel::pulse_area(0.01);
    uint64_t i = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(run_trial(c, 1, i++).metrics.p_fail_psi1);
    }
}
BENCHMARK(bm_trial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
