/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "satcuma/error.hpp"

namespace satcuma {

namespace {

constexpr double kPi = std::numbers::pi;

void require_threshold(double gamma, const char* what) {
  if (!(gamma > 0.0)) throw DomainError(std::string(what) + ": threshold must be positive");
}

// Accepts a result that missed its tolerance by less than 100x with a flag;
// anything worse is an error.
void check_quadrature(const QuadratureResult& r, const QuadratureSpec& spec, const char* what,
                      MetricResult& out) {
  if (r.converged) return;
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value));
  if (r.error > 100.0 * tol) {
    throw QuadratureError(std::string(what) + ": quadrature did not converge", r.value, r.error);
  }
  out.warnings.set(Warning::kQuadratureLimit);
}

MetricResult clamp_probability(double raw, MetricResult out) {
  const double clamped = std::clamp(raw, 0.0, 1.0);
  out.value = clamped;
  if (clamped != raw) {
    out.warnings.set(Warning::kClamped);
    out.clamp_correction = std::abs(raw - clamped);
  }
  return out;
}

QuadratureSpec outer_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  spec.rel_tol = 1e-8;
  spec.max_subdivisions = 200;
  return spec;
}

}  // namespace

MetricResult outage_exact(double gamma, const SinrModel& model, const QuadratureSpec& spec) {
  require_threshold(gamma, "outage_exact");
  const QuadratureResult r = sinr_cdf_exact(gamma, model, spec);
  MetricResult out;
  out.warnings = model.warnings;
  out.est_error = r.error;
  check_quadrature(r, spec, "outage_exact", out);
  return clamp_probability(r.value, out);
}

MetricResult outage_exact(double gamma, const Scenario& scenario) {
  return outage_exact(gamma, make_sinr_model(scenario));
}

MetricResult outage_compact(double gamma, const SinrModel& model) {
  require_threshold(gamma, "outage_compact");
  MetricResult out;
  out.warnings = model.warnings;
  return clamp_probability(sinr_cdf_compact(gamma, model), out);
}

MetricResult outage_compact(double gamma, const Scenario& scenario) {
  return outage_compact(gamma, make_sinr_model(scenario));
}

MetricResult outage_double_integral(double gamma, const SinrModel& model) {
  require_threshold(gamma, "outage_double_integral");
  MetricResult out;
  out.warnings = model.warnings;
  if (!model.has_interference()) {
    return clamp_probability(sinr_cdf_exact(gamma, model).value, out);
  }
  const double upper = std::min(gamma, model.sinr_max());
  const QuadratureSpec spec = outer_spec();
  const QuadratureResult r =
      integrate([&](double z) { return sinr_pdf_exact(z, model); }, 0.0, upper, spec);
  out.est_error = r.error;
  check_quadrature(r, spec, "outage_double_integral", out);
  return clamp_probability(r.value, out);
}

MetricResult ergodic_rate(const SinrModel& model, double bandwidth_hz, int users,
                          OutageForm form) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("ergodic_rate: bandwidth must be positive");
  if (users < 1) throw DomainError("ergodic_rate: user count must be >= 1");
  MetricResult out;
  out.warnings = model.warnings;

  auto coverage = [&](double y) {
    if (y <= 0.0) return 1.0;
    MetricResult o = form == OutageForm::kExact ? outage_exact(y, model) : outage_compact(y, model);
    out.warnings.merge(o.warnings);
    return 1.0 - o.value;
  };

  double ymax = model.sinr_max();
  if (form == OutageForm::kCompact && model.has_interference() && coverage(ymax) < 1e-9) {
    double lo = 0.0;
    double hi = ymax;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * ymax; ++i) {
      const double mid = 0.5 * (lo + hi);
      (coverage(mid) < 1e-9 ? hi : lo) = mid;
    }
    ymax = hi;
  }

  const QuadratureSpec spec = outer_spec();
  const QuadratureResult r =
      integrate([&](double y) { return coverage(y) / (1.0 + y); }, 0.0, ymax, spec);
  check_quadrature(r, spec, "ergodic_rate", out);
  const double scale = users * bandwidth_hz / std::numbers::ln2;
  out.value = scale * r.value;
  out.est_error = scale * r.error;
  return out;
}

MetricResult ergodic_rate(const Scenario& scenario, OutageForm form) {
  return ergodic_rate(make_sinr_model(scenario), scenario.budget.bandwidth_hz,
                      scenario.users.users(), form);
}

double mean_signal_power(const SinrModel& model) {
  const double x = 2.0 * kPi / model.mu();
  return model.alpha_max() / 2.0 * (1.0 + std::sin(x) / x);
}

MetricResult mean_snr(const SinrModel& model) {
  MetricResult out;
  out.warnings = model.warnings;
  out.value = mean_signal_power(model) / model.noise;
  return out;
}

MetricResult mean_snr_large_mu(const SinrModel& model) {
  MetricResult out;
  out.warnings = model.warnings;
  out.value = 4.0 * model.gamma * model.zeta_u * (model.antenna.ports() - 1) / (kPi * kPi);
  return out;
}

MetricResult mean_sinr(const SinrModel& model) {
  if (!model.has_interference()) return mean_snr(model);
  MetricResult out;
  out.warnings = model.warnings;
  const auto& tg = model.tg;
  const double upper = tg.omega + 40.0 * tg.kappa;
  const QuadratureSpec spec = default_sinr_quadrature();
  // E[1 / beta_tilde] with beta_tilde = noise e^s: the 1/beta_tilde factor
  // cancels against the Jacobian, leaving the density in log coordinates.
  const double n = model.noise;
  const QuadratureResult r = integrate(
      [&](double s) { return total_interference_pdf(n * std::expm1(s), tg); }, 0.0,
      std::log1p(upper / n), spec);
  check_quadrature(r, spec, "mean_sinr", out);
  const double ea = mean_signal_power(model);
  out.value = ea * r.value;
  out.est_error = ea * r.error;
  return out;
}

}  // namespace satcuma
