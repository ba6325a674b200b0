/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/cuma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "satcuma/error.hpp"

namespace satcuma {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundaryTol = 1e-12;

// Position of the desired phase plus a port offset within one turn, in [0, 1).
double phase_turn(double psi_turn, double port_turn) {
  double x = psi_turn + port_turn;
  x -= std::floor(x);
  return x;
}

bool in_set(double turn, PortSetKind kind) {
  if (kind == PortSetKind::kPositiveInPhase) return turn < 0.25 || turn > 0.75;
  return turn > 0.25 && turn < 0.75;
}

// -pi/mu + (2 pi/mu) ceil(t mu), shared by both compact forms.
double compact_offset(double t, const AntennaConfig& cfg) {
  const double mu = cfg.mu();
  return -std::numbers::pi / mu + kTwoPi / mu * std::ceil(t * mu);
}

bool is_integer(double x) { return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x)); }

}  // namespace

double port_turn(int k, const AntennaConfig& cfg) {
  const long long n = cfg.mu_numerator();
  const long long r = (static_cast<long long>(k - 1) * cfg.mu_denominator()) % n;
  return static_cast<double>(r) / static_cast<double>(n);
}

PortSet activated_set(double psi_u, const AntennaConfig& cfg, PortSetKind kind) {
  PortSet set{kind, {}};
  const double u = psi_u / kTwoPi;
  for (int k = 2; k <= cfg.ports(); ++k) {
    if (in_set(phase_turn(u, port_turn(k, cfg)), kind)) set.indices.push_back(k);
  }
  return set;
}

bool on_sign_boundary(double psi_u, const AntennaConfig& cfg) {
  for (int k = 2; k <= cfg.ports(); ++k) {
    if (std::abs(std::cos(psi_u + kTwoPi * port_turn(k, cfg))) <= kBoundaryTol) return true;
  }
  return false;
}

WindowBounds window_bounds(double psi_u, int mu) {
  if (mu < 2 || mu % 2 != 0) throw DomainError("window_bounds: mu must be an even positive integer");
  const double lower = (0.75 - psi_u / kTwoPi) * mu;
  const double upper = (1.25 - psi_u / kTwoPi) * mu;
  WindowBounds w;
  w.low = static_cast<int>(std::ceil(lower)) + 1;
  w.up = static_cast<int>(std::floor(upper)) + 1;
  w.degenerate = is_integer(lower) || is_integer(upper);
  return w;
}

double signal_amplitude_bruteforce(double psi, double zeta, const PortSet& set,
                                   const AntennaConfig& cfg) {
  double sum = 0.0;
  for (int k : set.indices) sum += std::cos(psi + kTwoPi * port_turn(k, cfg));
  return std::sqrt(zeta) * sum;
}

double signal_power_compact(double psi_u, double zeta_u, const AntennaConfig& cfg) {
  const double t = mapped_phase(psi_u);
  const double c = std::cos(-kTwoPi * t + compact_offset(t, cfg));
  const double v = cfg.v();
  return zeta_u * c * c / (v * v);
}

double interference_suppression(double psi_tilde, double t, const AntennaConfig& cfg) {
  const double s = std::sin(psi_tilde + compact_offset(t, cfg));
  return s * s;
}

double interference_power_compact(double psi_tilde, double zeta_tilde, double t,
                                  const AntennaConfig& cfg) {
  const double v = cfg.v();
  return zeta_tilde * interference_suppression(psi_tilde, t, cfg) / (v * v);
}

double instant_sinr(double alpha, std::span<const double> y, double kbar, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("instant_sinr: Gamma must be positive");
  double beta = 0.0;
  for (double v : y) beta += v;
  return alpha / (beta + kbar / (2.0 * gamma));
}

double k2_residual_bound(const AntennaConfig& cfg) {
  const double mu = cfg.mu();
  return std::abs(std::sin(std::numbers::pi * cfg.ports() / mu)) / std::sin(std::numbers::pi / mu);
}

InstantPower instant_power_bruteforce(std::span<const double> psi, std::span<const double> zeta,
                                      const AntennaConfig& cfg, double gamma, PortSetKind kind) {
  if (psi.empty() || psi.size() != zeta.size()) {
    throw DomainError("instant_power_bruteforce: psi and zeta must be non-empty and equal length");
  }
  const PortSet set = activated_set(psi[0], cfg, kind);
  InstantPower p;
  const double a = signal_amplitude_bruteforce(psi[0], zeta[0], set, cfg);
  p.alpha = a * a;
  for (std::size_t i = 1; i < psi.size(); ++i) {
    const double b = signal_amplitude_bruteforce(psi[i], zeta[i], set, cfg);
    p.y_per_user.push_back(b * b);
    p.beta += b * b;
  }
  p.activated = static_cast<int>(set.size());
  p.sinr = instant_sinr(p.alpha, p.y_per_user, p.activated, gamma);
  if (!cfg.mu_is_even_integer()) p.warnings.set(Warning::kOddMu);
  if (on_sign_boundary(psi[0], cfg)) p.warnings.set(Warning::kDegeneratePhase);
  return p;
}

InstantPower instant_power_compact(std::span<const double> psi, std::span<const double> zeta,
                                   const AntennaConfig& cfg, double gamma) {
  if (psi.empty() || psi.size() != zeta.size()) {
    throw DomainError("instant_power_compact: psi and zeta must be non-empty and equal length");
  }
  InstantPower p;
  p.alpha = signal_power_compact(psi[0], zeta[0], cfg);
  const double t = mapped_phase(psi[0]);
  for (std::size_t i = 1; i < psi.size(); ++i) {
    p.y_per_user.push_back(interference_power_compact(psi[i], zeta[i], t, cfg));
    p.beta += p.y_per_user.back();
  }
  p.activated = static_cast<int>(cfg.activated_ports());
  p.sinr = instant_sinr(p.alpha, p.y_per_user, cfg.activated_ports(), gamma);
  if (!cfg.mu_is_even_integer()) p.warnings.set(Warning::kOddMu);
  return p;
}

PortTable::PortTable(const AntennaConfig& cfg) : cfg_(cfg) {
  const auto n = static_cast<std::size_t>(cfg.ports() - 1);
  turn_.reserve(n);
  cos_.reserve(n);
  sin_.reserve(n);
  for (int k = 2; k <= cfg.ports(); ++k) {
    const double turn = port_turn(k, cfg);
    turn_.push_back(turn);
    cos_.push_back(std::cos(kTwoPi * turn));
    sin_.push_back(std::sin(kTwoPi * turn));
  }
}

double PortTable::Sums::amplitude(double psi) const {
  return std::cos(psi) * cos_sum - std::sin(psi) * sin_sum;
}

PortTable::Sums PortTable::sums(double psi_u, PortSetKind kind) const {
  Sums s;
  const double u = psi_u / kTwoPi;
  const double cp = std::cos(psi_u);
  const double sp = std::sin(psi_u);
  for (std::size_t i = 0; i < turn_.size(); ++i) {
    if (std::abs(cp * cos_[i] - sp * sin_[i]) <= kBoundaryTol) s.degenerate = true;
    if (!in_set(phase_turn(u, turn_[i]), kind)) continue;
    s.cos_sum += cos_[i];
    s.sin_sum += sin_[i];
    ++s.count;
  }
  return s;
}

}  // namespace satcuma
