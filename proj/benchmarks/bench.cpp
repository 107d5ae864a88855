//
// Copyright 2026 The mi-accountant Authors
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
//

#include <benchmark/benchmark.h>

#include "mia/gaussian_tv.hpp"
#include "mia/mc.hpp"
#include "mia/quadrature.hpp"
#include "mia/rdp.hpp"

namespace {

mia::MechanismSchedule homogeneous(double sigma, double q, double r,
                                   int steps) {
  mia::MechanismSchedule s;
  s.steps.assign(static_cast<std::size_t>(steps), {sigma, q, r});
  return s;
}

void BM_MiAdvantageMc(benchmark::State& state) {
  const auto sched = homogeneous(1.0, 0.1, 1.0, static_cast<int>(state.range(0)));
  const mia::McConfig cfg{100000, 7, 0.99, 16384, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mia::mi_advantage_mc(sched, cfg));
  }
  state.SetItemsProcessed(state.iterations() * 100000 * state.range(0));
}
BENCHMARK(BM_MiAdvantageMc)->Arg(1)->Arg(10)->Arg(100);

void BM_TvaQuadrature(benchmark::State& state) {
  const mia::GaussianMixture p{{0.9, 0.0, 1.0}, {0.1, 1.0, 1.0}};
  const mia::GaussianMixture q{{1.0, 0.0, 1.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mia::tva_quadrature(p, q, 0.5));
  }
}
BENCHMARK(BM_TvaQuadrature);

void BM_TvaClosed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mia::tva_gaussian_closed({1.0, 1.0, 0.5}));
  }
}
BENCHMARK(BM_TvaClosed);

void BM_RdpCurve(benchmark::State& state) {
  const auto sched = homogeneous(1.0, 0.02, 1.0, 2500);
  const auto grid = mia::default_alpha_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mia::rdp_curve(sched, grid));
  }
}
BENCHMARK(BM_RdpCurve);

void BM_StepDivergenceFractional(benchmark::State& state) {
  const mia::ScheduleStep step{1.0, 0.1, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mia::step_divergence(step, 1.5));
  }
}
BENCHMARK(BM_StepDivergenceFractional);

}  // namespace

BENCHMARK_MAIN();
