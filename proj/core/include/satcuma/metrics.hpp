/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "satcuma/distributions.hpp"
#include "satcuma/quadrature.hpp"
#include "satcuma/scenario.hpp"
#include "satcuma/warnings.hpp"

namespace satcuma {

struct MetricResult {
  double value = 0.0;
  double est_error = 0.0;
  WarningSet warnings;
  /// |raw - clamped| when a probability had to be clamped into [0, 1].
  double clamp_correction = 0.0;
};

/// Outage probability P(SINR < gamma) as a single integral over the signal
/// phase of the truncated-Gaussian interference CDF. Clamped to [0, 1].
MetricResult outage_exact(double gamma, const SinrModel& model,
                          const QuadratureSpec& spec = default_sinr_quadrature());
MetricResult outage_exact(double gamma, const Scenario& scenario);

/// Large-mu closed form [1 - Phi(zeta_u/(gamma kappa V^2) - noise/kappa - omega/kappa)] / Phi(omega/kappa),
/// clamped to [0, 1].
MetricResult outage_compact(double gamma, const SinrModel& model);
MetricResult outage_compact(double gamma, const Scenario& scenario);

/// Outage from the definition, integral of the exact SINR density over (0, gamma].
/// Nested quadrature; used to cross-check the single-integral form.
MetricResult outage_double_integral(double gamma, const SinrModel& model);

enum class OutageForm { kExact, kCompact };

/// C_e = (users B / ln 2) int_0^ymax (1 - O(y)) / (1 + y) dy, with ymax the
/// largest SINR (or, for the compact outage, where 1 - O(y) < 1e-9).
MetricResult ergodic_rate(const SinrModel& model, double bandwidth_hz, int users, OutageForm form);
/// Uses the scenario's bandwidth and user count.
MetricResult ergodic_rate(const Scenario& scenario, OutageForm form);

/// E[SINR] = E[alpha] E[1 / beta_tilde] (signal and interference independent).
MetricResult mean_sinr(const SinrModel& model);
/// E[(2 Gamma / Kbar) alpha].
MetricResult mean_snr(const SinrModel& model);
/// 4 Gamma zeta_u (K - 1) / pi^2.
MetricResult mean_snr_large_mu(const SinrModel& model);

/// E[alpha] = (zeta_u / 2V^2) (1 + sin(2 pi/mu) / (2 pi/mu)).
double mean_signal_power(const SinrModel& model);

}  // namespace satcuma
