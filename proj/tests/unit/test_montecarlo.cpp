/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "satcuma/config.hpp"
#include "satcuma/cuma.hpp"
#include "satcuma/distributions.hpp"
#include "satcuma/error.hpp"
#include "satcuma/montecarlo.hpp"
#include "satcuma/normal.hpp"
#include "satcuma/rng.hpp"

using namespace satcuma;

namespace {

Scenario table_scenario(int ports, int aperture, int users) {
  ScenarioConfig c;
  c.ports = ports;
  c.aperture = aperture;
  c.users = users;
  return build_scenario(c);
}

}  // namespace

TEST(RunTrials, DeterministicAcrossWorkers) {
  const Scenario s = table_scenario(21, 2, 5);
  const auto a = run_trials(s, 10, 42);
  const auto b = run_trials(s, 10, 42);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.sinr, b.sinr);
  const auto c = run_trials(s, 1001, 42, {.workers = 1});
  const auto d = run_trials(s, 1001, 42, {.workers = 8});
  EXPECT_EQ(c.alpha, d.alpha);
  EXPECT_EQ(c.y, d.y);
  EXPECT_EQ(c.sinr, d.sinr);
  EXPECT_NE(run_trials(s, 10, 43).alpha, a.alpha);
}

TEST(RunTrials, BruteForceMatchesCompactPerTrial) {
  const Scenario s = table_scenario(21, 2, 3);
  const auto b = run_trials(s, 2000, 7);
  for (long long i = 0; i < b.n_trials; ++i) {
    // Recover the phases exactly as the sampler draws them.
    SplitMix64 rng(trial_seed(7, static_cast<std::uint64_t>(i)));
    const double psi0 = rng.phase();
    const double psi1 = rng.phase();
    const double alpha = signal_power_compact(psi0, s.users.zeta[0], s.antenna);
    ASSERT_NEAR(b.alpha[i] / alpha, 1.0, 1e-9);
    const double y = interference_power_compact(psi1, s.users.zeta[1], mapped_phase(psi0), s.antenna);
    ASSERT_NEAR(b.y_at(i, 0), y, 1e-9 * std::max(y, alpha));
    ASSERT_EQ(b.activated[i], 10);
  }
}

TEST(RunTrials, SingleUserHasNoInterference) {
  const auto b = run_trials(table_scenario(21, 2, 1), 100, 1);
  for (double beta : b.beta) EXPECT_EQ(beta, 0.0);
  EXPECT_TRUE(b.y.empty());
}

TEST(RunTrials, CollectsNegativeSet) {
  const auto b = run_trials(table_scenario(61, 3, 2), 500, 3, {.workers = 2, .collect_k2 = true});
  ASSERT_EQ(b.alpha_k2.size(), 500u);
  for (long long i = 0; i < 500; ++i) EXPECT_NEAR(b.alpha_k2[i] / b.alpha[i], 1.0, 1e-9);
}

TEST(RunTrials, RejectsBadArguments) {
  const Scenario s = table_scenario(21, 2, 2);
  EXPECT_THROW(run_trials(s, 0, 1), DomainError);
  EXPECT_THROW(run_trials(s, 10, 1, {.workers = 0}), DomainError);
}

TEST(EmpiricalTools, KsAgainstKnownDistribution) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> normal;
  std::vector<double> x(20000);
  for (auto& v : x) v = normal(gen);
  EXPECT_LT(ks_distance(x, [](double v) { return normal_cdf(v); }), 0.015);
  EXPECT_GT(ks_distance(x, [](double v) { return normal_cdf(v - 0.2); }), 0.05);

  // Against its own empirical CDF the statistic is at most 1/n.
  const EmpiricalDist e(x);
  EXPECT_LE(ks_distance_sorted(e.sorted(), [&](double v) { return e.cdf(v); }), 1.0 / x.size() + 1e-15);
  EXPECT_THROW(ks_distance({}, [](double) { return 0.0; }), DomainError);
}

TEST(EmpiricalTools, HistogramAndMoments) {
  std::vector<double> x;
  for (int i = 0; i < 1000; ++i) x.push_back(i * 0.001);
  const EmpiricalDist e(x);
  EXPECT_EQ(e.histogram().total(), 1000);
  EXPECT_EQ(e.histogram().edges.size(), e.histogram().counts.size() + 1);
  EXPECT_NEAR(e.mean(), 0.4995, 1e-12);
  EXPECT_NEAR(e.cdf(0.4995), 0.5, 1e-12);
  const auto h = make_histogram(e.sorted(), 0.0, 1.0, 10);
  for (auto c : h.counts) EXPECT_EQ(c, 100);
  EXPECT_NEAR(h.density(3), 1.0, 1e-12);
}

TEST(EmpiricalTools, CdfAndOutage) {
  const std::vector<double> x{0.1, 0.2, 0.3, 0.4};
  const std::vector<double> t{0.05, 0.2, 1.0};
  EXPECT_EQ(empirical_cdf(x, t), (std::vector<double>{0.0, 0.5, 1.0}));
  const auto o = empirical_outage(x, 0.25);
  EXPECT_EQ(o.below, 2);
  EXPECT_DOUBLE_EQ(o.value, 0.5);
  EXPECT_LT(o.ci_lo, 0.5);
  EXPECT_GT(o.ci_hi, 0.5);
  EXPECT_EQ(empirical_outage(x, 0.01).value, 0.0);
  EXPECT_THROW(empirical_outage(x, 0.0), DomainError);
}

TEST(EmpiricalTools, WilsonIntervalReference) {
  std::vector<double> x(1000, 1.0);
  for (int i = 0; i < 300; ++i) x[i] = 0.0;
  const auto o = empirical_outage(x, 0.5);
  EXPECT_NEAR(o.ci_lo, 0.2724068424770048, 1e-12);
  EXPECT_NEAR(o.ci_hi, 0.3291238609172172, 1e-12);
}

TEST(EmpiricalTools, TabulatedCdf) {
  const TabulatedCdf t([](double v) { return normal_cdf(v); }, -8.0, 8.0, 16001);
  for (double v : {-2.0, -0.3, 0.0, 1.7}) EXPECT_NEAR(t(v), normal_cdf(v), 1e-7);
  EXPECT_EQ(t(-9.0), 0.0);
  EXPECT_EQ(t(9.0), 1.0);
}

TEST(EmpiricalTools, Correlation) {
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> b{2, 4, 6, 8};
  const std::vector<double> c{4, 3, 2, 1};
  EXPECT_NEAR(correlation(a, b), 1.0, 1e-15);
  EXPECT_NEAR(correlation(a, c), -1.0, 1e-15);
  EXPECT_EQ(correlation(a, std::vector<double>(4, 1.0)), 0.0);
}

TEST(EmpiricalTools, FsdHoldsForSignalOverInterference) {
  const auto b = run_trials(table_scenario(13, 2, 2), 20000, 11);
  EXPECT_TRUE(fsd_check(b.alpha, b.y).dominates);
  // Reversed roles fail.
  EXPECT_FALSE(fsd_check(b.y, b.alpha).dominates);
}

TEST(EmpiricalTools, BatchCsv) {
  const auto b = run_trials(table_scenario(9, 2, 3), 2, 1);
  std::ostringstream os;
  write_batch_csv(os, b);
  const std::string text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "trial_index,alpha,y_1,y_2,beta,sinr");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}
