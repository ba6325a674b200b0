/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "satcuma/warnings.hpp"

namespace satcuma {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kBoltzmann = 1.381e-23;         // J/K, as tabulated for the link budget

/// Fluid-antenna geometry: K ports spread over W wavelengths.
///
/// The port density mu = (K - 1) / W is kept as the exact rational (K - 1, W)
/// so the even-integer test never goes through floating point.
class AntennaConfig {
 public:
  /// Throws ConfigError("K"/"W") when K < 2 or W < 1.
  AntennaConfig(int ports, int aperture_wavelengths);

  int ports() const { return ports_; }
  int aperture() const { return aperture_; }

  int mu_numerator() const { return ports_ - 1; }
  int mu_denominator() const { return aperture_; }
  double mu() const { return static_cast<double>(ports_ - 1) / aperture_; }

  bool mu_is_integer() const { return (ports_ - 1) % aperture_ == 0; }
  bool mu_is_even_integer() const { return (ports_ - 1) % (2 * aperture_) == 0; }

  /// Activated port count (K - 1) / 2; exact for even mu.
  double activated_ports() const { return 0.5 * (ports_ - 1); }

  /// V = sin(pi / mu) / W.
  double v() const;

  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;

 private:
  int ports_;
  int aperture_;
};

/// RF scenario, linear units throughout.
struct LinkBudget {
  double power_w = 1.0;
  double gain = 1e4;
  double bandwidth_hz = 10e6;
  double temperature_k = 207.0;
  double boltzmann = kBoltzmann;
  double carrier_hz = 30e9;
  double symbol_power = 1.0;
  double speed_of_light = kSpeedOfLight;

  /// Throws ConfigError naming the first non-positive field.
  void validate() const;

  double wavelength() const { return speed_of_light / carrier_hz; }
};

/// sigma_eta^2 = c_B * T * B (watts).
double noise_power(const LinkBudget& budget);

/// Gamma = P * G * sigma_s^2 / (c_B * T * B).
double nominal_snr(const LinkBudget& budget);

/// Free-space coefficient (lambda / (4 pi r))^2 with lambda = c / f_c.
/// Throws DomainError for non-positive inputs.
double path_loss_coeff(double carrier_hz, double distance_m, double speed_of_light = kSpeedOfLight);

double db_to_linear(double db);

/// Per-user path-loss coefficients and reference-port phases. Index 0 is the
/// desired (typical) user; the rest interfere with it. All users share the
/// alignment upsilon = 1.
struct UserField {
  std::vector<double> zeta;
  std::vector<double> psi;

  int users() const { return static_cast<int>(zeta.size()); }
  double desired_zeta() const { return zeta.front(); }
  double desired_psi() const { return psi.front(); }
  std::span<const double> interferer_zeta() const { return std::span(zeta).subspan(1); }
  std::span<const double> interferer_psi() const { return std::span(psi).subspan(1); }

  /// Throws ConfigError unless sizes match, U >= 1, zeta > 0 and psi in (0, 2 pi).
  void validate() const;
};

struct DerivedChannel {
  double v = 0.0;               // sin(pi/mu)/W
  double t = 0.0;               // 3/4 - psi_u/(2 pi)
  double activated_ports = 0.0; // Kbar
  double gamma = 0.0;           // nominal SNR
};

/// Reference phase of user `user_index` drawn from `seed`. Independent of the
/// user count, so adding users never reshuffles existing ones.
double reference_phase(std::uint64_t seed, int user_index);

/// t = 3/4 - psi_u / (2 pi), in (-1/4, 3/4) for psi_u in (0, 2 pi).
double mapped_phase(double psi_u);

struct Scenario {
  AntennaConfig antenna;
  LinkBudget budget;
  UserField users;
  DerivedChannel derived;
  std::uint64_t seed = 1;
  WarningSet warnings;

  /// Validates every part, fills `derived` and the odd-mu warning.
  static Scenario assemble(AntennaConfig antenna, LinkBudget budget, UserField users,
                           std::uint64_t seed);

  /// Same geometry/budget with a different user count: the first `count` users
  /// are kept, extra users copy the desired user's path loss with fresh phases.
  Scenario with_users(int count) const;
  Scenario with_antenna(AntennaConfig antenna) const;
  Scenario with_budget(LinkBudget budget) const;
};

}  // namespace satcuma
