/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <benchmark/benchmark.h>

#include <vector>

#include "satcuma/config.hpp"
#include "satcuma/cuma.hpp"
#include "satcuma/distributions.hpp"
#include "satcuma/metrics.hpp"
#include "satcuma/montecarlo.hpp"
#include "satcuma/rng.hpp"

namespace {

satcuma::Scenario scenario(int ports, int users) {
  satcuma::ScenarioConfig c;
  c.ports = ports;
  c.users = users;
  return satcuma::build_scenario(c);
}

void BM_RunTrials(benchmark::State& state) {
  const auto sc = scenario(static_cast<int>(state.range(0)), 5);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto b = satcuma::run_trials(sc, 100'000, 1, satcuma::TrialOptions{.workers = workers});
    benchmark::DoNotOptimize(b.sinr.data());
  }
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_RunTrials)->Args({21, 1})->Args({21, 4})->Args({201, 1})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_BruteForceVsCompact(benchmark::State& state) {
  const satcuma::AntennaConfig cfg(static_cast<int>(state.range(0)), 2);
  const bool compact = state.range(1) != 0;
  satcuma::SplitMix64 rng(3);
  const double zeta[] = {1.0, 1.0, 1.0, 1.0, 1.0};
  double psi[5];
  for (auto _ : state) {
    for (auto& p : psi) p = rng.phase();
    auto r = compact ? satcuma::instant_power_compact(psi, zeta, cfg, 1.0)
                     : satcuma::instant_power_bruteforce(psi, zeta, cfg, 1.0);
    benchmark::DoNotOptimize(r.sinr);
  }
}
BENCHMARK(BM_BruteForceVsCompact)->Args({21, 0})->Args({21, 1})->Args({201, 0})->Args({201, 1});

void BM_OutageExact(benchmark::State& state) {
  const auto m = satcuma::make_sinr_model(scenario(static_cast<int>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(satcuma::outage_exact(0.35, m).value);
}
BENCHMARK(BM_OutageExact)->Arg(9)->Arg(21)->Arg(81);

void BM_OutageCompact(benchmark::State& state) {
  const auto m = satcuma::make_sinr_model(scenario(21, 5));
  for (auto _ : state) benchmark::DoNotOptimize(satcuma::outage_compact(0.35, m).value);
}
BENCHMARK(BM_OutageCompact);

void BM_SinrPdfExact(benchmark::State& state) {
  const auto m = satcuma::make_sinr_model(scenario(21, 5));
  for (auto _ : state) benchmark::DoNotOptimize(satcuma::sinr_pdf_exact(0.3, m));
}
BENCHMARK(BM_SinrPdfExact);

void BM_ErgodicRate(benchmark::State& state) {
  const auto sc = scenario(21, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(satcuma::ergodic_rate(sc, satcuma::OutageForm::kExact).value);
  }
}
BENCHMARK(BM_ErgodicRate)->Unit(benchmark::kMillisecond);

void BM_KsDistance(benchmark::State& state) {
  const auto sc = scenario(21, 5);
  const auto b = satcuma::run_trials(sc, state.range(0), 1);
  const auto m = satcuma::make_sinr_model(sc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(satcuma::ks_distance(
        b.alpha, [&](double a) { return satcuma::signal_cdf(a, m.zeta_u, m.mu(), m.v); }));
  }
}
BENCHMARK(BM_KsDistance)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
