/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <vector>

#include "satcuma/quadrature.hpp"
#include "satcuma/scenario.hpp"
#include "satcuma/warnings.hpp"

namespace satcuma {

struct SupportInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
  bool interior(double x) const { return x > lo && x < hi; }
};

/// [cos^2(pi/mu) zeta/V^2, zeta/V^2].
SupportInterval signal_support(double zeta_u, double mu, double v);
/// [0, zeta/V^2].
SupportInterval interference_support(double zeta, double v);

// Densities return 0 outside their support and +infinity at singular endpoints.

/// (mu / 2 pi) sqrt(V^2 / (zeta alpha - V^2 alpha^2)).
double signal_pdf(double alpha, double zeta_u, double mu, double v);
/// 1 - (mu / 2 pi) arccos(2 V^2 alpha / zeta - 1), clamped to {0, 1} outside the support.
double signal_cdf(double alpha, double zeta_u, double mu, double v);

/// (1 / pi) sqrt(V^2 / (zeta y - V^2 y^2)).
double interference_pdf_per_user(double y, double zeta, double v);
/// 1 - arccos(2 V^2 Y / zeta - 1) / pi, clamped to {0, 1} outside the support.
double interference_cdf_per_user(double y, double zeta, double v);
double interference_mean(double zeta, double v);      // zeta / (2 V^2)
double interference_variance(double zeta, double v);  // zeta^2 / (8 V^4)

/// Pre-truncation mean and standard deviation of the aggregate interference.
struct TruncGaussParams {
  double omega = 0.0;
  double kappa = 0.0;

  /// Phi(omega / kappa), the mass kept by truncation at zero.
  double mass() const;
};

/// omega = sum zeta / (2 V^2), kappa = sqrt(sum zeta^2 / (8 V^4)).
/// Throws DomainError on an empty interferer list.
TruncGaussParams trunc_gauss_params(std::span<const double> interferer_zeta, double v);

/// N(beta; omega, kappa^2) / Phi(omega/kappa) on beta >= 0.
double total_interference_pdf(double beta, const TruncGaussParams& p);
double total_interference_cdf(double beta, const TruncGaussParams& p);

/// Kbar / (2 Gamma).
double noise_term(double kbar, double gamma);

/// Aggregate density shifted by the noise term; support beta_tilde >= noise.
double interference_plus_noise_pdf(double beta_tilde, const TruncGaussParams& p, double noise);
double interference_plus_noise_cdf(double beta_tilde, const TruncGaussParams& p, double noise);

/// Everything the SINR distributions need, resolved from a scenario.
struct SinrModel {
  AntennaConfig antenna{2, 1};
  double zeta_u = 1.0;
  std::vector<double> interferer_zeta;
  double gamma = 1.0;

  double v = 0.0;
  double kbar = 0.0;
  double noise = 0.0;   // Kbar / (2 Gamma)
  TruncGaussParams tg;  // zero when there are no interferers
  WarningSet warnings;  // odd-mu

  bool has_interference() const { return !interferer_zeta.empty(); }
  double mu() const { return antenna.mu(); }
  /// zeta_u / V^2, the largest signal power.
  double alpha_max() const { return zeta_u / (v * v); }
  /// alpha_max / noise, the largest SINR.
  double sinr_max() const { return alpha_max() / noise; }
};

SinrModel make_sinr_model(const AntennaConfig& antenna, double zeta_u,
                          std::vector<double> interferer_zeta, double gamma);
SinrModel make_sinr_model(const Scenario& scenario);

/// Quadrature settings used by the SINR integrals unless overridden.
QuadratureSpec default_sinr_quadrature();

/// Exact SINR density, single integral over the signal phase:
///   f_Z(z) = (mu/pi) int_0^{theta_max} (A cos^2 th / z^2) f_btilde(A cos^2 th / z) dth,
/// A = zeta_u/V^2. Zero for z <= 0 or z > A / noise. Throws QuadratureError.
double sinr_pdf_exact(double z, const SinrModel& model,
                      const QuadratureSpec& spec = default_sinr_quadrature());

/// P(SINR < z) by the same single integral, before any clamping.
QuadratureResult sinr_cdf_exact(double z, const SinrModel& model,
                                const QuadratureSpec& spec = default_sinr_quadrature());

/// Large-mu closed form with alpha fixed at zeta_u/V^2. Zero above A / noise.
double sinr_pdf_compact(double z, const SinrModel& model);

/// [1 - Phi((A/z - omega - noise)/kappa)] / Phi(omega/kappa), unclamped.
double sinr_cdf_compact(double z, const SinrModel& model);

/// F_Y(Y) - F_alpha(Y): F_Y(Y) below the signal support, (mu/2 - 1)(1 - F_Y(Y)) on it.
double cdf_difference(double y, double zeta, double mu, double v);

/// f_alpha(Y) / f_Y(Y): mu/2 on the signal support, 0 elsewhere.
double pdf_ratio(double y, double zeta, double mu, double v);

}  // namespace satcuma
