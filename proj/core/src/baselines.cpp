/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/baselines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "satcuma/cuma.hpp"
#include "satcuma/error.hpp"
#include "satcuma/rng.hpp"

namespace satcuma {

namespace {

constexpr double kPi = std::numbers::pi;

void require_antennas(int m) {
  if (m < 1) throw DomainError("antenna count M must be >= 1");
}

int ceil_int(double x) { return static_cast<int>(std::ceil(x - 1e-12 * std::max(1.0, x))); }

}  // namespace

double mrc_sinr(int antennas, double zeta_u, std::span<const double> interferer_zeta,
                double gamma) {
  require_antennas(antennas);
  double sum = 0.0;
  for (double z : interferer_zeta) sum += z;
  return antennas * zeta_u / (antennas * sum + 1.0 / gamma);
}

double mrc_snr(int antennas, double zeta_u, double gamma) {
  require_antennas(antennas);
  return antennas * zeta_u * gamma;
}

double cuma_signal_gain(int ports) { return 4.0 * (ports - 1) / (kPi * kPi); }

BeamformingGains cuma_beamforming_gains(const AntennaConfig& antenna,
                                        std::span<const double> psi_tilde, double t) {
  BeamformingGains g;
  g.signal_gain = cuma_signal_gain(antenna.ports());
  for (double p : psi_tilde) {
    const double s = interference_suppression(p, t, antenna);
    g.suppression.push_back(s);
    g.interferer_gains.push_back(g.signal_gain * s);
  }
  if (!antenna.mu_is_even_integer()) g.warnings.set(Warning::kOddMu);
  return g;
}

int min_ports_vs_mrc(int antennas, double gamma, std::span<const double> interferer_zeta,
                     std::span<const double> delta, double epsilon, int aperture) {
  require_antennas(antennas);
  if (!(epsilon > 0.0)) throw DomainError("min_ports_vs_mrc: epsilon must be positive");
  if (delta.size() != interferer_zeta.size()) {
    throw DomainError("min_ports_vs_mrc: one delta per interferer is required");
  }
  double weighted = 0.0;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] < 0.0 || delta[i] > 1.0) throw DomainError("min_ports_vs_mrc: delta outside [0, 1]");
    weighted += interferer_zeta[i] * delta[i];
  }
  const double gain_term = (kPi * kPi / 4.0 * antennas) / (antennas * gamma * weighted + 1.0);
  return std::max(ceil_int(gain_term), ceil_int(epsilon * aperture)) + 2;
}

int min_ports_noise_limited(int antennas, double epsilon, int aperture) {
  require_antennas(antennas);
  return std::max(ceil_int(kPi * kPi / 4.0 * antennas), ceil_int(epsilon * aperture)) + 2;
}

int min_ports_interference_limited(double epsilon, int aperture) {
  return ceil_int(epsilon * aperture) + 2;
}

GainComparison compare_gains(int ports, int antennas, double gamma,
                             std::span<const double> interferer_zeta,
                             std::span<const double> delta, double epsilon, int aperture) {
  GainComparison c;
  c.cuma_gain = cuma_signal_gain(ports);
  c.mrc_gain = antennas;
  c.delta.assign(delta.begin(), delta.end());
  c.epsilon = epsilon;
  c.min_ports = min_ports_vs_mrc(antennas, gamma, interferer_zeta, delta, epsilon, aperture);
  return c;
}

ChannelMatrix los_channel(int antennas, std::span<const double> zeta, std::span<const double> psi,
                          std::span<const double> direction_cosine) {
  require_antennas(antennas);
  if (zeta.size() != psi.size() || zeta.size() != direction_cosine.size()) {
    throw DomainError("los_channel: zeta, psi and direction cosines must have equal length");
  }
  ChannelMatrix h(antennas, static_cast<int>(zeta.size()));
  for (int u = 0; u < h.cols; ++u) {
    const double amp = std::sqrt(zeta[u]);
    for (int m = 0; m < antennas; ++m) {
      h(m, u) = std::polar(amp, psi[u] + kPi * m * direction_cosine[u]);
    }
  }
  return h;
}

std::optional<std::vector<double>> zf_sinr_from_channel(const ChannelMatrix& h, double gamma,
                                                        double cutoff) {
  if (h.cols < 1 || h.rows < 1) throw DomainError("zf_sinr_from_channel: empty channel");
  const Eigen::Map<const Eigen::MatrixXcd> hm(h.data.data(), h.rows, h.cols);
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hm, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() < h.cols || !(s(s.size() - 1) >= cutoff * s(0))) return std::nullopt;
  // (H^H H)^-1 = V diag(1/s^2) V^H; only the diagonal is needed.
  const Eigen::MatrixXcd& v = svd.matrixV();
  std::vector<double> out(static_cast<std::size_t>(h.cols));
  for (int u = 0; u < h.cols; ++u) {
    double d = 0.0;
    for (int i = 0; i < s.size(); ++i) d += std::norm(v(u, i)) / (s(i) * s(i));
    out[static_cast<std::size_t>(u)] = gamma / d;
  }
  return out;
}

ZfStats zf_sinr_mc(int antennas, const Scenario& scenario, long long trials, std::uint64_t seed,
                   const ZfOptions& options) {
  require_antennas(antennas);
  if (trials < 1) throw DomainError("zf_sinr_mc: trials must be >= 1");
  const int users = scenario.users.users();
  ZfStats st;
  st.trials = trials;
  st.cutoff = options.cutoff;
  std::vector<double> psi(static_cast<std::size_t>(users));
  std::vector<double> dir(static_cast<std::size_t>(users));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long long i = 0; i < trials; ++i) {
    SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    for (int u = 0; u < users; ++u) {
      psi[u] = rng.phase();
      dir[u] = 1.0 - options.direction_cosine_spread * rng.uniform_open();
    }
    const auto sinr = zf_sinr_from_channel(
        los_channel(antennas, scenario.users.zeta, psi, dir), scenario.derived.gamma,
        options.cutoff);
    if (!sinr) {
      ++st.failures;
      continue;
    }
    sum += sinr->front();
    sum_sq += sinr->front() * sinr->front();
  }
  const auto n = static_cast<double>(trials);
  st.mean_sinr = sum / n;
  st.variance = std::max(0.0, sum_sq / n - st.mean_sinr * st.mean_sinr);
  const long long ok = trials - st.failures;
  st.mean_sinr_success = ok > 0 ? sum / static_cast<double>(ok) : 0.0;
  return st;
}

MetricResult ocuma_rate(const Scenario& scenario, OutageForm form) {
  const SinrModel model = make_sinr_model(scenario.antenna, scenario.users.desired_zeta(), {},
                                          scenario.derived.gamma);
  return ergodic_rate(model, scenario.budget.bandwidth_hz, 1, form);
}

}  // namespace satcuma
