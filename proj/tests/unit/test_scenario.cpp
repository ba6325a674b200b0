/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "satcuma/error.hpp"
#include "satcuma/scenario.hpp"

using namespace satcuma;

TEST(AntennaConfig, DensityIsExactRational) {
  const AntennaConfig a(61, 3);
  EXPECT_EQ(a.mu_numerator(), 60);
  EXPECT_EQ(a.mu_denominator(), 3);
  EXPECT_DOUBLE_EQ(a.mu(), 20.0);
  EXPECT_TRUE(a.mu_is_even_integer());
  EXPECT_DOUBLE_EQ(a.activated_ports(), 30.0);

  const AntennaConfig b(9, 2);
  EXPECT_DOUBLE_EQ(b.mu(), 4.0);
  EXPECT_DOUBLE_EQ(b.activated_ports(), 4.0);

  const AntennaConfig odd(10, 3);
  EXPECT_TRUE(odd.mu_is_integer());
  EXPECT_FALSE(odd.mu_is_even_integer());
  EXPECT_FALSE(AntennaConfig(12, 2).mu_is_integer());
}

TEST(AntennaConfig, MuTimesWPlusOneIsK) {
  for (int k = 2; k <= 120; ++k) {
    for (int w = 1; w <= 7; ++w) {
      const AntennaConfig a(k, w);
      EXPECT_EQ(a.mu_numerator() + 1, k);
      EXPECT_EQ(a.mu_is_even_integer(), (k - 1) % (2 * w) == 0);
    }
  }
}

TEST(AntennaConfig, RejectsInvalidGeometry) {
  EXPECT_THROW(AntennaConfig(1, 1), ConfigError);
  EXPECT_THROW(AntennaConfig(5, 0), ConfigError);
  try {
    AntennaConfig(5, -2);
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "W");
  }
}

TEST(LinkBudget, PathLossExamples) {
  // Rounded wavelength 0.01 m.
  EXPECT_NEAR(path_loss_coeff(30e9, 1.2e6, 3e8) / 4.3976208178098e-19, 1.0, 1e-12);
  // Exact speed of light.
  EXPECT_NEAR(path_loss_coeff(30e9, 1.2e6) / 4.39153831569711e-19, 1.0, 1e-12);
  const double lambda = kSpeedOfLight / 30e9;
  EXPECT_NEAR(path_loss_coeff(30e9, lambda / (4.0 * std::numbers::pi)), 1.0, 1e-12);
  EXPECT_THROW(path_loss_coeff(0.0, 1.0), DomainError);
  EXPECT_THROW(path_loss_coeff(1e9, -1.0), DomainError);
}

TEST(LinkBudget, PathLossMonotone) {
  double prev = path_loss_coeff(30e9, 1e5);
  for (double r = 2e5; r < 4e7; r *= 1.7) {
    const double z = path_loss_coeff(30e9, r);
    EXPECT_LT(z, prev);
    prev = z;
  }
  prev = path_loss_coeff(1e9, 1e6);
  for (double f = 2e9; f < 1e11; f *= 1.9) {
    const double z = path_loss_coeff(f, 1e6);
    EXPECT_LT(z, prev);
    prev = z;
  }
}

TEST(LinkBudget, NominalSnrTableValues) {
  const LinkBudget b;
  EXPECT_NEAR(noise_power(b) / 2.85867e-14, 1.0, 1e-12);
  EXPECT_NEAR(nominal_snr(b) / 3.49813024938171e17, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(db_to_linear(40.0), 1e4);

  LinkBudget wide = b;
  wide.bandwidth_hz *= 2.0;
  EXPECT_NEAR(nominal_snr(wide), nominal_snr(b) / 2.0, 1e-6 * nominal_snr(b));

  for (double c : {0.01, 0.5, 3.0, 1e3}) {
    LinkBudget s = b;
    s.power_w *= c;
    s.gain /= c;
    EXPECT_NEAR(nominal_snr(s) / nominal_snr(b), 1.0, 1e-12);
  }

  LinkBudget bad = b;
  bad.temperature_k = 0.0;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(Scenario, AssembleDerivesChannel) {
  UserField users{{1.0, 1.0}, {std::numbers::pi / 3.0, 1.0}};
  const Scenario s = Scenario::assemble(AntennaConfig(9, 2), LinkBudget{}, users, 7);
  EXPECT_NEAR(s.derived.v, std::sin(std::numbers::pi / 4.0) / 2.0, 1e-15);
  EXPECT_NEAR(s.derived.t, 0.75 - 1.0 / 6.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.derived.activated_ports, 4.0);
  EXPECT_TRUE(s.warnings.empty());

  const Scenario odd = Scenario::assemble(AntennaConfig(10, 3), LinkBudget{}, users, 7);
  EXPECT_TRUE(odd.warnings.has(Warning::kOddMu));
}

TEST(Scenario, UserFieldValidation) {
  UserField bad_phase{{1.0}, {0.0}};
  EXPECT_THROW(bad_phase.validate(), ConfigError);
  UserField bad_zeta{{-1.0}, {1.0}};
  EXPECT_THROW(bad_zeta.validate(), ConfigError);
  UserField mismatch{{1.0, 1.0}, {1.0}};
  EXPECT_THROW(mismatch.validate(), ConfigError);
  EXPECT_THROW(UserField{}.validate(), ConfigError);
}

TEST(Scenario, WithUsersKeepsExistingUsers) {
  UserField users{{1.0, 2.0}, {0.5, 1.5}};
  const Scenario s = Scenario::assemble(AntennaConfig(21, 2), LinkBudget{}, users, 3);
  const Scenario grown = s.with_users(5);
  ASSERT_EQ(grown.users.users(), 5);
  EXPECT_DOUBLE_EQ(grown.users.psi[1], 1.5);
  EXPECT_DOUBLE_EQ(grown.users.zeta[4], 1.0);
  EXPECT_DOUBLE_EQ(grown.users.psi[4], reference_phase(3, 4));
  EXPECT_EQ(grown.with_users(2).users.psi, s.users.psi);
}

TEST(Scenario, MappedPhaseRange) {
  EXPECT_NEAR(mapped_phase(1e-9), 0.75, 1e-9);
  EXPECT_NEAR(mapped_phase(2.0 * std::numbers::pi - 1e-9), -0.25, 1e-9);
}
