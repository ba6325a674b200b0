/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "satcuma/error.hpp"

namespace satcuma {

enum class Substitution {
  kNone,
  /// x = a + (b - a) sin^2(theta), theta in [0, pi/2]. Cancels integrable
  /// 1/sqrt endpoint singularities at both ends.
  kTrigEndpoint,
};

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 500;
  Substitution substitution = Substitution::kNone;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
      throw DomainError("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Global adaptive Gauss-Kronrod (7/15) integration of `f` over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// error is below max(abs_tol, rel_tol * |value|) or `max_subdivisions` panels
/// exist. Ties resolve to the leftmost panel, so the evaluation order (and the
/// result) is bit-reproducible. Endpoints are never evaluated.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  if (a > b) {
    out = integrate(std::forward<F>(f), b, a, spec);
    out.value = -out.value;
    return out;
  }

  auto body = [&](auto&& g, double lo, double hi) {
    std::vector<detail::Panel> panels;
    panels.reserve(static_cast<std::size_t>(spec.max_subdivisions));
    panels.push_back(detail::gauss_kronrod_15(g, lo, hi));
    int evaluations = 15;
    auto totals = [&] {
      double value = 0.0;
      double error = 0.0;
      for (const auto& p : panels) {
        value += p.value;
        error += p.error;
      }
      return std::pair{value, error};
    };
    auto [value, error] = totals();
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value)) &&
           static_cast<int>(panels.size()) < spec.max_subdivisions) {
      auto worst = std::max_element(panels.begin(), panels.end(),
                                    [](const auto& l, const auto& r) { return l.error < r.error; });
      const double mid = 0.5 * (worst->a + worst->b);
      if (!(mid > worst->a && mid < worst->b)) break;  // panel no longer splittable
      const detail::Panel left = detail::gauss_kronrod_15(g, worst->a, mid);
      const detail::Panel right = detail::gauss_kronrod_15(g, mid, worst->b);
      evaluations += 30;
      *worst = left;
      panels.insert(worst + 1, right);
      std::tie(value, error) = totals();
    }
    QuadratureResult r;
    r.value = value;
    r.error = error;
    r.subdivisions = static_cast<int>(panels.size());
    r.evaluations = evaluations;
    r.converged = error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    return r;
  };

  if (spec.substitution == Substitution::kTrigEndpoint) {
    const double width = b - a;
    auto g = [&](double theta) {
      const double s = std::sin(theta);
      return f(a + width * s * s) * width * std::sin(2.0 * theta);
    };
    return body(g, 0.0, 0.5 * std::numbers::pi);
  }
  return body(f, a, b);
}

/// As `integrate`, but throws QuadratureError (with the partial estimate) when
/// the tolerance was not reached.
template <class F>
QuadratureResult integrate_checked(F&& f, double a, double b, const QuadratureSpec& spec,
                                   const std::string& what) {
  QuadratureResult r = integrate(std::forward<F>(f), a, b, spec);
  if (!r.converged) {
    throw QuadratureError(what + ": quadrature did not converge (achieved error " +
                              std::to_string(r.error) + ")",
                          r.value, r.error);
  }
  return r;
}

}  // namespace satcuma
