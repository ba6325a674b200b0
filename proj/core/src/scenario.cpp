/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "satcuma/error.hpp"
#include "satcuma/rng.hpp"

namespace satcuma {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(field, "must be strictly positive and finite");
  }
}

}  // namespace

AntennaConfig::AntennaConfig(int ports, int aperture_wavelengths)
    : ports_(ports), aperture_(aperture_wavelengths) {
  if (ports < 2) throw ConfigError("K", "port count must be >= 2, got " + std::to_string(ports));
  if (aperture_wavelengths < 1) {
    throw ConfigError("W", "aperture must be >= 1 wavelength, got " +
                               std::to_string(aperture_wavelengths));
  }
}

double AntennaConfig::v() const { return std::sin(std::numbers::pi / mu()) / aperture_; }

void LinkBudget::validate() const {
  require_positive(power_w, "P_watts");
  require_positive(gain, "G_dBi");
  require_positive(bandwidth_hz, "B_hz");
  require_positive(temperature_k, "T_kelvin");
  require_positive(boltzmann, "c_B");
  require_positive(carrier_hz, "f_c_hz");
  require_positive(symbol_power, "sigma_s2");
  require_positive(speed_of_light, "speed_of_light");
}

double noise_power(const LinkBudget& budget) {
  return budget.boltzmann * budget.temperature_k * budget.bandwidth_hz;
}

double nominal_snr(const LinkBudget& budget) {
  budget.validate();
  return budget.power_w * budget.gain * budget.symbol_power / noise_power(budget);
}

double path_loss_coeff(double carrier_hz, double distance_m, double speed_of_light) {
  if (!(carrier_hz > 0.0) || !(distance_m > 0.0) || !(speed_of_light > 0.0)) {
    throw DomainError("path_loss_coeff: frequency, distance and speed of light must be positive");
  }
  const double ratio = (speed_of_light / carrier_hz) / (4.0 * std::numbers::pi * distance_m);
  return ratio * ratio;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void UserField::validate() const {
  if (zeta.empty()) throw ConfigError("U", "at least one user is required");
  if (psi.size() != zeta.size()) {
    throw ConfigError("psi", "phase count does not match user count");
  }
  for (double z : zeta) require_positive(z, "distance_m");
  for (double p : psi) {
    if (!(p > 0.0 && p < 2.0 * std::numbers::pi)) {
      throw ConfigError("psi", "reference phase must lie in (0, 2 pi)");
    }
  }
}

double reference_phase(std::uint64_t seed, int user_index) {
  SplitMix64 rng(trial_seed(seed ^ 0x5a7c0ffeeULL, static_cast<std::uint64_t>(user_index)));
  return rng.phase();
}

double mapped_phase(double psi_u) { return 0.75 - psi_u / (2.0 * std::numbers::pi); }

Scenario Scenario::assemble(AntennaConfig antenna, LinkBudget budget, UserField users,
                            std::uint64_t seed) {
  budget.validate();
  users.validate();
  Scenario s{antenna, budget, std::move(users), {}, seed, {}};
  s.derived.v = antenna.v();
  s.derived.t = mapped_phase(s.users.desired_psi());
  s.derived.activated_ports = antenna.activated_ports();
  s.derived.gamma = nominal_snr(budget);
  if (!antenna.mu_is_even_integer()) s.warnings.set(Warning::kOddMu);
  return s;
}

Scenario Scenario::with_users(int count) const {
  if (count < 1) throw ConfigError("U", "user count must be >= 1");
  UserField field;
  for (int i = 0; i < count; ++i) {
    field.zeta.push_back(i < users.users() ? users.zeta[i] : users.desired_zeta());
    field.psi.push_back(i < users.users() ? users.psi[i] : reference_phase(seed, i));
  }
  return assemble(antenna, budget, std::move(field), seed);
}

Scenario Scenario::with_antenna(AntennaConfig a) const { return assemble(a, budget, users, seed); }

Scenario Scenario::with_budget(LinkBudget b) const { return assemble(antenna, b, users, seed); }

}  // namespace satcuma
