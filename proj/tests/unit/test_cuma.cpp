/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "satcuma/cuma.hpp"
#include "satcuma/error.hpp"
#include "satcuma/rng.hpp"

using namespace satcuma;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<AntennaConfig> even_configs() {
  std::vector<AntennaConfig> out;
  for (int mu = 2; mu <= 40; mu += 2) {
    for (int w = 1; w <= 5; ++w) out.emplace_back(mu * w + 1, w);
  }
  return out;
}

}  // namespace

TEST(ActivatedSet, FourPortsPerWavelength) {
  const AntennaConfig cfg(9, 2);
  EXPECT_EQ(activated_set(kPi / 3.0, cfg).indices, (std::vector<int>{4, 5, 8, 9}));
  EXPECT_EQ(activated_set(kPi / 3.0, cfg, PortSetKind::kNegativeInPhase).indices,
            (std::vector<int>{2, 3, 6, 7}));
}

TEST(ActivatedSet, BoundaryPortsBelongToNeitherSet) {
  const AntennaConfig cfg(9, 2);
  const auto k1 = activated_set(kPi / 2.0, cfg);
  const auto k2 = activated_set(kPi / 2.0, cfg, PortSetKind::kNegativeInPhase);
  // Ports 3, 5, 7, 9 sit at cos = 0.
  EXPECT_EQ(k1.indices, (std::vector<int>{4, 8}));
  EXPECT_EQ(k2.indices, (std::vector<int>{2, 6}));
  EXPECT_TRUE(on_sign_boundary(kPi / 2.0, cfg));
  EXPECT_FALSE(on_sign_boundary(kPi / 3.0, cfg));
}

TEST(ActivatedSet, CardinalityAndDisjointness) {
  SplitMix64 rng(11);
  for (const auto& cfg : even_configs()) {
    for (int i = 0; i < 50; ++i) {
      const double psi = rng.phase();
      const auto k1 = activated_set(psi, cfg);
      const auto k2 = activated_set(psi, cfg, PortSetKind::kNegativeInPhase);
      ASSERT_EQ(static_cast<double>(k1.size()), cfg.activated_ports());
      ASSERT_EQ(k1.size() + k2.size(), static_cast<std::size_t>(cfg.ports() - 1));
      for (int k : k1.indices) {
        ASSERT_GE(k, 2);
        ASSERT_TRUE(std::find(k2.indices.begin(), k2.indices.end(), k) == k2.indices.end());
      }
    }
  }
}

TEST(WindowBounds, Examples) {
  const auto w = window_bounds(kPi / 3.0, 4);
  EXPECT_EQ(w.low, 4);
  EXPECT_EQ(w.up, 5);
  EXPECT_FALSE(w.degenerate);

  const auto d = window_bounds(kPi, 4);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.up - d.low + 1, 3);

  EXPECT_THROW(window_bounds(1.0, 5), DomainError);
  EXPECT_THROW(window_bounds(1.0, 0), DomainError);
}

TEST(WindowBounds, LengthIsHalfMu) {
  SplitMix64 rng(5);
  for (int mu = 2; mu <= 40; mu += 2) {
    for (int i = 0; i < 200; ++i) {
      const auto w = window_bounds(rng.phase(), mu);
      if (!w.degenerate) ASSERT_EQ(w.up - w.low + 1, mu / 2);
    }
  }
}

TEST(WindowBounds, MatchesFirstPeriodOfActivatedSet) {
  const AntennaConfig cfg(41, 1);  // mu = 40, one period
  SplitMix64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const double psi = rng.phase();
    const auto w = window_bounds(psi, 40);
    if (w.degenerate) continue;
    const auto k1 = activated_set(psi, cfg);
    // The window is contiguous modulo one period of mu ports.
    for (int k = w.low; k <= w.up; ++k) {
      const int port = ((k - 2) % 40 + 40) % 40 + 2;
      ASSERT_TRUE(std::find(k1.indices.begin(), k1.indices.end(), port) != k1.indices.end())
          << "psi " << psi << " k " << k;
    }
  }
}

TEST(SignalPower, ExampleValues) {
  const AntennaConfig cfg(9, 2);
  const auto k1 = activated_set(kPi / 3.0, cfg);
  EXPECT_NEAR(signal_amplitude_bruteforce(kPi / 3.0, 1.0, k1, cfg), 2.7320508075688772, 1e-12);
  EXPECT_NEAR(signal_power_compact(kPi / 3.0, 1.0, cfg), 7.4641016151377544, 1e-12);
  EXPECT_DOUBLE_EQ(signal_amplitude_bruteforce(1.0, 1.0, PortSet{}, cfg), 0.0);

  const double t = mapped_phase(kPi / 3.0);
  EXPECT_NEAR(interference_power_compact(kPi / 2.0, 1.0, t, cfg), 4.0, 1e-12);
  const double b = signal_amplitude_bruteforce(kPi / 2.0, 1.0, k1, cfg);
  EXPECT_NEAR(b * b, 4.0, 1e-12);
}

TEST(SignalPower, CompactMatchesBruteForce) {
  SplitMix64 rng(2024);
  for (const auto& cfg : even_configs()) {
    for (int i = 0; i < 200; ++i) {
      const double psi = rng.phase();
      const double psi_i = rng.phase();
      const auto k1 = activated_set(psi, cfg);
      const double a = signal_amplitude_bruteforce(psi, 1.0, k1, cfg);
      const double alpha = signal_power_compact(psi, 1.0, cfg);
      ASSERT_NEAR(alpha, a * a, 1e-9 * std::max(1.0, a * a)) << cfg.ports() << "," << cfg.aperture();
      const double b = signal_amplitude_bruteforce(psi_i, 1.0, k1, cfg);
      const double y = interference_power_compact(psi_i, 1.0, mapped_phase(psi), cfg);
      ASSERT_NEAR(y, b * b, 1e-9 * std::max(1.0, b * b));
    }
  }
}

TEST(SignalPower, SupportBounds) {
  SplitMix64 rng(3);
  for (const auto& cfg : even_configs()) {
    const double v = cfg.v();
    const double hi = 1.0 / (v * v);
    const double lo = std::pow(std::cos(kPi / cfg.mu()), 2) * hi;
    for (int i = 0; i < 50; ++i) {
      const double a = signal_power_compact(rng.phase(), 1.0, cfg);
      ASSERT_GE(a, lo * (1 - 1e-12));
      ASSERT_LE(a, hi * (1 + 1e-12));
      const double y = interference_power_compact(rng.phase(), 1.0, rng.uniform_open() - 0.25, cfg);
      ASSERT_GE(y, 0.0);
      ASSERT_LE(y, hi * (1 + 1e-12));
    }
  }
}

TEST(SignalPower, LargeDensityApproachesConstant) {
  const AntennaConfig cfg(2001, 5);  // mu = 400
  const double hi = 1.0 / (cfg.v() * cfg.v());
  for (double psi : {0.3, 1.9, 4.4}) EXPECT_NEAR(signal_power_compact(psi, 1.0, cfg) / hi, 1.0, 1e-4);
}

TEST(SignalPower, PhasePeriodicity) {
  SplitMix64 rng(17);
  for (const auto& cfg : even_configs()) {
    const double step = 2.0 * kPi / cfg.mu();
    for (int i = 0; i < 20; ++i) {
      const double psi = rng.phase();
      const double shifted = std::fmod(psi + step, 2.0 * kPi);
      const double a = signal_power_compact(psi, 1.0, cfg);
      ASSERT_NEAR(signal_power_compact(shifted, 1.0, cfg), a, 1e-9 * std::max(1.0, a));
      ASSERT_EQ(activated_set(psi, cfg).size(), activated_set(shifted, cfg).size());
    }
  }
}

TEST(InstantSinr, Examples) {
  EXPECT_NEAR(instant_sinr(7.4641, {}, 4.0, 10.0), 37.3205, 1e-9);
  EXPECT_DOUBLE_EQ(instant_sinr(0.0, std::vector<double>{1.0}, 4.0, 10.0), 0.0);
  const std::vector<double> y{4.0};
  EXPECT_NEAR(instant_sinr(7.4641, y, 4.0, 1e300), 7.4641 / 4.0, 1e-12);
  EXPECT_THROW(instant_sinr(1.0, {}, 1.0, 0.0), DomainError);
}

TEST(InstantPower, BruteForceAndCompactAgree) {
  const AntennaConfig cfg(21, 2);
  SplitMix64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const std::vector<double> psi{rng.phase(), rng.phase(), rng.phase()};
    const std::vector<double> zeta{1.0, 0.5, 2.0};
    const auto b = instant_power_bruteforce(psi, zeta, cfg, 100.0);
    const auto c = instant_power_compact(psi, zeta, cfg, 100.0);
    ASSERT_EQ(b.activated, 10);
    ASSERT_NEAR(b.alpha, c.alpha, 1e-9 * b.alpha);
    ASSERT_NEAR(b.beta, c.beta, 1e-9 * std::max(1.0, b.beta));
    ASSERT_NEAR(b.sinr, c.sinr, 1e-9 * b.sinr);
  }
}

TEST(K2Residual, BoundExamples) {
  const AntennaConfig cfg(61, 3);
  EXPECT_NEAR(k2_residual_bound(cfg), 1.0, 1e-12);
  EXPECT_NEAR(1.0 / cfg.v(), 19.177, 1e-3);
  for (const auto& c : even_configs()) {
    EXPECT_LE(k2_residual_bound(c), 1.0 / std::sin(kPi / c.mu()) + 1e-12);
  }
}

TEST(K2Residual, AmplitudesMirror) {
  const AntennaConfig cfg(61, 3);
  const double bound = k2_residual_bound(cfg);
  SplitMix64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const double psi = rng.phase();
    const double a1 = signal_amplitude_bruteforce(psi, 1.0, activated_set(psi, cfg), cfg);
    const double a2 = signal_amplitude_bruteforce(
        psi, 1.0, activated_set(psi, cfg, PortSetKind::kNegativeInPhase), cfg);
    ASSERT_LE(std::abs(std::abs(a2) - a1), bound);
  }
}

TEST(PortTable, MatchesExplicitSums) {
  for (const auto& cfg : {AntennaConfig(9, 2), AntennaConfig(61, 3), AntennaConfig(10, 3)}) {
    const PortTable table(cfg);
    SplitMix64 rng(21);
    for (int i = 0; i < 200; ++i) {
      const double psi = rng.phase();
      const double other = rng.phase();
      for (auto kind : {PortSetKind::kPositiveInPhase, PortSetKind::kNegativeInPhase}) {
        const auto set = activated_set(psi, cfg, kind);
        const auto s = table.sums(psi, kind);
        ASSERT_EQ(s.count, static_cast<int>(set.size()));
        ASSERT_NEAR(s.amplitude(psi), signal_amplitude_bruteforce(psi, 1.0, set, cfg), 1e-11);
        ASSERT_NEAR(s.amplitude(other), signal_amplitude_bruteforce(other, 1.0, set, cfg), 1e-11);
      }
    }
  }
}
