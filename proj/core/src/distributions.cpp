/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "satcuma/error.hpp"
#include "satcuma/normal.hpp"

namespace satcuma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// arccos of 2 V^2 x / zeta - 1 with the argument kept inside [-1, 1].
double phase_of(double x, double zeta, double v) {
  return std::acos(std::clamp(2.0 * v * v * x / zeta - 1.0, -1.0, 1.0));
}

// sqrt(V^2 / (zeta x - V^2 x^2)), factored as 1 / sqrt(x (zeta/V^2 - x)) to
// avoid cancellation next to the upper endpoint.
double arcsine_density(double x, double zeta, double v) {
  const double d = x * (zeta / (v * v) - x);
  if (!(d > 0.0)) return kInf;
  return 1.0 / std::sqrt(d);
}

// P(beta_tilde <= b) on the shifted truncated support.
double btilde_cdf(double b, const SinrModel& m) {
  return interference_plus_noise_cdf(b, m.tg, m.noise);
}

}  // namespace

SupportInterval signal_support(double zeta_u, double mu, double v) {
  const double c = std::cos(kPi / mu);
  const double hi = zeta_u / (v * v);
  return {c * c * hi, hi};
}

SupportInterval interference_support(double zeta, double v) { return {0.0, zeta / (v * v)}; }

double signal_pdf(double alpha, double zeta_u, double mu, double v) {
  const SupportInterval s = signal_support(zeta_u, mu, v);
  if (!s.contains(alpha)) return 0.0;
  if (alpha == s.hi) return kInf;
  return mu / (2.0 * kPi) * arcsine_density(alpha, zeta_u, v);
}

double signal_cdf(double alpha, double zeta_u, double mu, double v) {
  const SupportInterval s = signal_support(zeta_u, mu, v);
  if (alpha <= s.lo) return 0.0;
  if (alpha >= s.hi) return 1.0;
  return std::clamp(1.0 - mu / (2.0 * kPi) * phase_of(alpha, zeta_u, v), 0.0, 1.0);
}

double interference_pdf_per_user(double y, double zeta, double v) {
  const SupportInterval s = interference_support(zeta, v);
  if (!s.contains(y)) return 0.0;
  if (!s.interior(y)) return kInf;
  return arcsine_density(y, zeta, v) / kPi;
}

double interference_cdf_per_user(double y, double zeta, double v) {
  const SupportInterval s = interference_support(zeta, v);
  if (y <= s.lo) return 0.0;
  if (y >= s.hi) return 1.0;
  return 1.0 - phase_of(y, zeta, v) / kPi;
}

double interference_mean(double zeta, double v) { return zeta / (2.0 * v * v); }

double interference_variance(double zeta, double v) {
  return zeta * zeta / (8.0 * v * v * v * v);
}

double TruncGaussParams::mass() const { return normal_cdf(omega / kappa); }

TruncGaussParams trunc_gauss_params(std::span<const double> interferer_zeta, double v) {
  if (interferer_zeta.empty()) {
    throw DomainError("trunc_gauss_params: at least one interferer is required");
  }
  double s1 = 0.0;
  double s2 = 0.0;
  for (double z : interferer_zeta) {
    s1 += z;
    s2 += z * z;
  }
  const double v2 = v * v;
  return {s1 / (2.0 * v2), std::sqrt(s2 / (8.0 * v2 * v2))};
}

double total_interference_pdf(double beta, const TruncGaussParams& p) {
  if (beta < 0.0) return 0.0;
  return normal_pdf((beta - p.omega) / p.kappa) / (p.kappa * p.mass());
}

double total_interference_cdf(double beta, const TruncGaussParams& p) {
  if (beta <= 0.0) return 0.0;
  const double lo = normal_cdf(-p.omega / p.kappa);
  const double x = (beta - p.omega) / p.kappa;
  // Upper tail through the survival function keeps precision near 1.
  const double cdf = x > 0.0 ? 1.0 - normal_sf(x) : normal_cdf(x);
  return std::clamp((cdf - lo) / p.mass(), 0.0, 1.0);
}

double noise_term(double kbar, double gamma) { return kbar / (2.0 * gamma); }

double interference_plus_noise_pdf(double beta_tilde, const TruncGaussParams& p, double noise) {
  return total_interference_pdf(beta_tilde - noise, p);
}

double interference_plus_noise_cdf(double beta_tilde, const TruncGaussParams& p, double noise) {
  return total_interference_cdf(beta_tilde - noise, p);
}

SinrModel make_sinr_model(const AntennaConfig& antenna, double zeta_u,
                          std::vector<double> interferer_zeta, double gamma) {
  if (!(zeta_u > 0.0) || !(gamma > 0.0)) {
    throw DomainError("make_sinr_model: zeta_u and Gamma must be positive");
  }
  SinrModel m;
  m.antenna = antenna;
  m.zeta_u = zeta_u;
  m.interferer_zeta = std::move(interferer_zeta);
  m.gamma = gamma;
  m.v = antenna.v();
  m.kbar = antenna.activated_ports();
  m.noise = noise_term(m.kbar, gamma);
  if (m.has_interference()) m.tg = trunc_gauss_params(m.interferer_zeta, m.v);
  if (!antenna.mu_is_even_integer()) m.warnings.set(Warning::kOddMu);
  return m;
}

SinrModel make_sinr_model(const Scenario& scenario) {
  const auto& u = scenario.users;
  return make_sinr_model(scenario.antenna, u.desired_zeta(),
                         {u.interferer_zeta().begin(), u.interferer_zeta().end()},
                         scenario.derived.gamma);
}

QuadratureSpec default_sinr_quadrature() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-9;
  spec.max_subdivisions = 400;
  return spec;
}

namespace {

// Largest signal phase theta with A cos^2(theta) / z >= noise, capped at pi/mu.
double theta_max(double z, const SinrModel& m) {
  const double r = std::min(1.0, m.noise * z / m.alpha_max());
  return std::min(kPi / m.mu(), std::acos(std::sqrt(r)));
}

}  // namespace

double sinr_pdf_exact(double z, const SinrModel& m, const QuadratureSpec& spec) {
  if (!(z > 0.0) || z > m.sinr_max()) return 0.0;
  const double a = m.alpha_max();
  if (!m.has_interference()) return m.noise * signal_pdf(m.noise * z, m.zeta_u, m.mu(), m.v);
  const double upper = theta_max(z, m);
  if (!(upper > 0.0)) return 0.0;
  auto f = [&](double th) {
    const double c = std::cos(th);
    const double alpha = a * c * c;
    return alpha / (z * z) * interference_plus_noise_pdf(alpha / z, m.tg, m.noise);
  };
  const QuadratureResult r = integrate_checked(f, 0.0, upper, spec, "sinr_pdf_exact");
  return m.mu() / kPi * r.value;
}

QuadratureResult sinr_cdf_exact(double z, const SinrModel& m, const QuadratureSpec& spec) {
  QuadratureResult out;
  out.converged = true;
  if (!(z > 0.0)) return out;
  if (!m.has_interference()) {
    out.value = signal_cdf(m.noise * z, m.zeta_u, m.mu(), m.v);
    return out;
  }
  const double a = m.alpha_max();
  const double upper = theta_max(z, m);
  if (!(upper > 0.0)) {
    out.value = 1.0;
    return out;
  }
  auto f = [&](double th) {
    const double c = std::cos(th);
    return btilde_cdf(a * c * c / z, m);
  };
  QuadratureResult r = integrate(f, 0.0, upper, spec);
  const double scale = m.mu() / kPi;
  r.value = 1.0 - scale * r.value;
  r.error *= scale;
  return r;
}

double sinr_pdf_compact(double z, const SinrModel& m) {
  if (!(z > 0.0) || z > m.sinr_max()) return 0.0;
  const double a = m.alpha_max();
  if (!m.has_interference()) return 0.0;  // point mass at A / noise
  const double x = (a / z - m.tg.omega - m.noise) / m.tg.kappa;
  return a / (m.tg.mass() * z * z * m.tg.kappa) * normal_pdf(x);
}

double sinr_cdf_compact(double z, const SinrModel& m) {
  if (!(z > 0.0)) return 0.0;
  const double a = m.alpha_max();
  if (!m.has_interference()) return z > m.sinr_max() ? 1.0 : 0.0;
  const double x = (a / z - m.tg.omega - m.noise) / m.tg.kappa;
  return normal_sf(x) / m.tg.mass();
}

double cdf_difference(double y, double zeta, double mu, double v) {
  const double fy = interference_cdf_per_user(y, zeta, v);
  if (y < signal_support(zeta, mu, v).lo) return fy;
  return (0.5 * mu - 1.0) * (1.0 - fy);
}

double pdf_ratio(double y, double zeta, double mu, double v) {
  return signal_support(zeta, mu, v).contains(y) ? 0.5 * mu : 0.0;
}

}  // namespace satcuma
