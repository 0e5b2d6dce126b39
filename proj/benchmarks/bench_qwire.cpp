/* Copyright 2026 The qwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qwire/qwire.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_DetSequence(benchmark::State& state) {
    const qwire::SymToeplitzTridiag m(2.5, 1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qwire::det_sequence(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetSequence)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity(benchmark::oN);

void BM_DetSequenceExact(benchmark::State& state) {
    const qwire::SymToeplitzTridiag m(7.0, -3.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qwire::det_sequence_exact(m));
}
BENCHMARK(BM_DetSequenceExact)->RangeMultiplier(4)->Range(16, 1024);

void BM_IdentityResidualExact(benchmark::State& state) {
    const qwire::SymToeplitzTridiag m(-9.0, 10.0, 40);
    for (auto _ : state) benchmark::DoNotOptimize(qwire::identity_residual_exact(m));
}
BENCHMARK(BM_IdentityResidualExact);

void BM_TransmittanceGf(benchmark::State& state) {
    const auto p = qwire::WireParams::from_broadening(static_cast<int>(state.range(0)), 0.0, 1.0, 0.5);
    double eps = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwire::transmittance_gf(p, eps));
        eps += 1e-6;
    }
}
BENCHMARK(BM_TransmittanceGf)->Arg(1)->Arg(12)->Arg(256);

void BM_TransmittanceEo(benchmark::State& state) {
    const auto p = qwire::WireParams::from_broadening(static_cast<int>(state.range(0)), 0.0, 1.0, 0.5);
    double eps = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwire::transmittance_eo(p, eps));
        eps += 1e-6;
    }
}
BENCHMARK(BM_TransmittanceEo)->Arg(1)->Arg(12)->Arg(256);

void BM_Spectrum(benchmark::State& state) {
    const auto p = qwire::WireParams::from_broadening(12, 0.0, 1.0, 0.3);
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwire::spectrum(p, -3.0, 3.0, points, qwire::Method::both, 1));
    }
    state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_Spectrum)->Arg(2001)->Arg(60001);

void BM_FirstInverseColumn(benchmark::State& state) {
    const auto p = qwire::WireParams::from_broadening(static_cast<int>(state.range(0)), 0.0, 1.0, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(qwire::first_inverse_column(p, 0.4));
}
BENCHMARK(BM_FirstInverseColumn)->Arg(12)->Arg(1024);

void BM_LandauerCurrent(benchmark::State& state) {
    const auto p = qwire::WireParams::from_broadening(static_cast<int>(state.range(0)), 0.0, 1.0, 0.3);
    const qwire::BiasWindow bias{1.0, -1.0, 0.02};
    for (auto _ : state) benchmark::DoNotOptimize(qwire::landauer_current(p, bias));
}
BENCHMARK(BM_LandauerCurrent)->Arg(1)->Arg(9);

void BM_Integrate(benchmark::State& state) {
    const auto p = qwire::WireParams::from_broadening(static_cast<int>(state.range(0)), 0.0, 1.0, 1.0);
    qwire::IntegratorConfig cfg;
    cfg.dt = 0.02;
    cfg.t_max = 40.0;
    cfg.convergence_window = 10.0;
    cfg.sample_stride = 50;
    for (auto _ : state) benchmark::DoNotOptimize(qwire::integrate(p, 0.5, cfg));
}
BENCHMARK(BM_Integrate)->Arg(1)->Arg(5)->Arg(32);

} // namespace

BENCHMARK_MAIN();
