/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma_app/report.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "satcuma/baselines.hpp"
#include "satcuma/error.hpp"
#include "satcuma/metrics.hpp"
#include "satcuma_app/output.hpp"

namespace satcuma::app {

namespace {

void line(std::ostream& out, const std::string& label, const std::string& value) {
  out << fmt::format("  {:<28} {}\n", label, value);
}

std::string with_warnings(const MetricResult& r) {
  std::string s = format_number(r.value);
  if (!r.warnings.empty()) s += "  [" + r.warnings.to_string() + "]";
  return s;
}

// Metrics are reported even when one of them cannot be evaluated.
template <class F>
std::string guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return std::string("failed: ") + e.what();
  }
}

}  // namespace

void write_scenario_report(std::ostream& out, const Scenario& sc, double gamma) {
  const auto& a = sc.antenna;
  const auto& b = sc.budget;
  out << "antenna\n";
  line(out, "ports K", std::to_string(a.ports()));
  line(out, "aperture W (wavelengths)", std::to_string(a.aperture()));
  line(out, "port density mu", format_number(a.mu()) + (a.mu_is_even_integer() ? "" : "  (not even)"));
  line(out, "activated ports Kbar", format_number(sc.derived.activated_ports));
  line(out, "V", format_number(sc.derived.v));

  out << "link budget\n";
  line(out, "carrier (Hz)", format_number(b.carrier_hz));
  line(out, "wavelength (m)", format_number(b.wavelength()));
  line(out, "bandwidth (Hz)", format_number(b.bandwidth_hz));
  line(out, "transmit power (W)", format_number(b.power_w));
  line(out, "antenna gain (linear)", format_number(b.gain));
  line(out, "temperature (K)", format_number(b.temperature_k));
  line(out, "noise power (W)", format_number(noise_power(b)));
  line(out, "nominal SNR Gamma", format_number(sc.derived.gamma));
  line(out, "nominal SNR (dB)", format_number(10.0 * std::log10(sc.derived.gamma)));

  out << "users\n";
  for (int u = 0; u < sc.users.users(); ++u) {
    line(out, fmt::format("user {}{}", u, u == 0 ? " (desired)" : ""),
         fmt::format("zeta {}  psi {}", format_number(sc.users.zeta[u]),
                     format_number(sc.users.psi[u])));
  }

  const SinrModel model = make_sinr_model(sc);
  out << "metrics\n";
  line(out, fmt::format("outage exact (gamma {})", format_number(gamma)),
       guarded([&] { return with_warnings(outage_exact(gamma, model)); }));
  if (model.has_interference()) {
    line(out, fmt::format("outage compact (gamma {})", format_number(gamma)),
         guarded([&] { return with_warnings(outage_compact(gamma, model)); }));
  }
  line(out, "mean SINR", guarded([&] { return with_warnings(mean_sinr(model)); }));
  line(out, "mean SNR", guarded([&] { return with_warnings(mean_snr(model)); }));
  line(out, "ergodic rate N-CUMA (bit/s)",
       guarded([&] { return with_warnings(ergodic_rate(sc, OutageForm::kExact)); }));
  line(out, "ergodic rate O-CUMA (bit/s)", guarded([&] { return with_warnings(ocuma_rate(sc)); }));
  const int m = 3 * sc.users.users();
  line(out, fmt::format("MRC SINR (M = {})", m),
       format_number(mrc_sinr(m, model.zeta_u, model.interferer_zeta, model.gamma)));
  line(out, "CUMA signal gain", format_number(cuma_signal_gain(a.ports())));
}

void write_sweep_report(std::ostream& out, const SweepSpec& spec) {
  out << "sweep " << spec.name << '\n';
  line(out, "parameter", sweep_param_name(spec.param));
  line(out, "grid", fmt::format("{} points, {} .. {}", spec.grid.size(), format_number(spec.grid.front()),
                                format_number(spec.grid.back())));
  std::string metrics;
  for (const auto& m : spec.metrics) metrics += (metrics.empty() ? "" : ", ") + m;
  line(out, "metrics", metrics);
  out << "fixed\n";
  for (const auto& [k, v] : spec.base.entries()) line(out, k, v);
  if (!spec.series.empty()) {
    out << "series\n";
    for (const auto& s : spec.series) {
      std::string o;
      for (const auto& [k, v] : s.overrides) o += (o.empty() ? "" : "; ") + k + "=" + v;
      line(out, s.name, o);
    }
  }
  const std::size_t curves = spec.series.empty() ? 1 : spec.series.size();
  line(out, "rows", std::to_string(curves * spec.grid.size() * spec.metrics.size()));
}

}  // namespace satcuma::app
