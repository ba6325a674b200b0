/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <vector>

#include "satcuma/scenario.hpp"
#include "satcuma/warnings.hpp"

namespace satcuma {

enum class PortSetKind {
  kPositiveInPhase,  // cos(psi_u + 2 pi (k-1)/mu) > 0
  kNegativeInPhase,  // cos(psi_u + 2 pi (k-1)/mu) < 0
};

/// Activated ports, 1-based indices in {2, ..., K}, ascending. Port 1 is the
/// phase reference and is never activated.
struct PortSet {
  PortSetKind kind = PortSetKind::kPositiveInPhase;
  std::vector<int> indices;

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
};

/// Fraction of a turn of port k's steering phase, ((k-1) W mod (K-1)) / (K-1).
/// Exact in rational arithmetic before the final division.
double port_turn(int k, const AntennaConfig& cfg);

/// Ports whose in-phase channel has the requested strict sign. Ports with
/// cos exactly 0 belong to neither set.
PortSet activated_set(double psi_u, const AntennaConfig& cfg,
                      PortSetKind kind = PortSetKind::kPositiveInPhase);

/// True if some port has |cos(psi_u + 2 pi (k-1)/mu)| <= 1e-12.
bool on_sign_boundary(double psi_u, const AntennaConfig& cfg);

struct WindowBounds {
  int low = 0;
  int up = 0;
  bool degenerate = false;  // t mu or (t + 1/2) mu is an exact integer
};

/// Single-period window of positive in-phase ports:
///   k_low = ceil((3/4 - psi/2pi) mu) + 1,  k_up = floor((5/4 - psi/2pi) mu) + 1.
/// Throws DomainError unless mu is an even positive integer.
WindowBounds window_bounds(double psi_u, int mu);

/// sqrt(zeta) * sum over `set` of cos(psi + 2 pi (k-1)/mu). Signed.
double signal_amplitude_bruteforce(double psi, double zeta, const PortSet& set,
                                   const AntennaConfig& cfg);

/// Compact signal power zeta cos^2(-2 pi t - pi/mu + (2 pi/mu) ceil(t mu)) / V^2.
/// Guaranteed for even mu; evaluated as written otherwise.
double signal_power_compact(double psi_u, double zeta_u, const AntennaConfig& cfg);

/// Compact interference power zeta sin^2(psi_tilde - pi/mu + (2 pi/mu) ceil(t mu)) / V^2,
/// with t taken from the desired user.
double interference_power_compact(double psi_tilde, double zeta_tilde, double t,
                                  const AntennaConfig& cfg);

/// sin^2(psi_tilde - pi/mu + (2 pi/mu) ceil(t mu)): the per-interferer suppression factor.
double interference_suppression(double psi_tilde, double t, const AntennaConfig& cfg);

/// alpha / (sum(y) + Kbar / (2 Gamma)). Throws DomainError if gamma <= 0.
double instant_sinr(double alpha, std::span<const double> y, double kbar, double gamma);

/// |sin(pi K / mu)| / sin(pi / mu), amplitude bound on |sqrt(alpha_K2) - sqrt(alpha_K1)|.
double k2_residual_bound(const AntennaConfig& cfg);

struct InstantPower {
  double alpha = 0.0;
  std::vector<double> y_per_user;
  double beta = 0.0;
  double sinr = 0.0;
  int activated = 0;
  WarningSet warnings;
};

/// Port-sum evaluation for one phase draw. `psi` and `zeta` list all users,
/// desired user first; Kbar is the actual size of the activated set.
InstantPower instant_power_bruteforce(std::span<const double> psi, std::span<const double> zeta,
                                      const AntennaConfig& cfg, double gamma,
                                      PortSetKind kind = PortSetKind::kPositiveInPhase);

/// Compact-form evaluation of the same quantities, Kbar = (K-1)/2.
InstantPower instant_power_compact(std::span<const double> psi, std::span<const double> zeta,
                                   const AntennaConfig& cfg, double gamma);

/// Precomputed steering table for repeated brute-force evaluation.
///
/// With C = sum cos(theta_k), S = sum sin(theta_k) over an activated set, the
/// unit-gain amplitude of any user with phase p is cos(p) C - sin(p) S.
class PortTable {
 public:
  explicit PortTable(const AntennaConfig& cfg);

  struct Sums {
    double cos_sum = 0.0;
    double sin_sum = 0.0;
    int count = 0;
    bool degenerate = false;

    double amplitude(double psi) const;
  };

  Sums sums(double psi_u, PortSetKind kind = PortSetKind::kPositiveInPhase) const;

  const AntennaConfig& config() const { return cfg_; }
  int size() const { return static_cast<int>(turn_.size()); }

 private:
  AntennaConfig cfg_;
  std::vector<double> turn_;  // ports 2..K
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace satcuma
