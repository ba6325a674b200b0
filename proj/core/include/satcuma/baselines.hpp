/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "satcuma/metrics.hpp"
#include "satcuma/scenario.hpp"
#include "satcuma/warnings.hpp"

namespace satcuma {

/// M * zeta_u / (M * sum(zeta_interferers) + 1 / Gamma). Identical arrival
/// angles give the interference the same array gain M as the signal.
double mrc_sinr(int antennas, double zeta_u, std::span<const double> interferer_zeta, double gamma);

/// M * zeta_u * Gamma, the interference-free MRC SNR.
double mrc_snr(int antennas, double zeta_u, double gamma);

/// 4 (K - 1) / pi^2.
double cuma_signal_gain(int ports);

struct BeamformingGains {
  double signal_gain = 0.0;
  std::vector<double> suppression;        // sin^2(psi_tilde - pi/mu + (2 pi/mu) ceil(t mu))
  std::vector<double> interferer_gains;   // signal_gain * suppression
  WarningSet warnings;                    // odd-mu outside the compact regime
};

BeamformingGains cuma_beamforming_gains(const AntennaConfig& antenna,
                                        std::span<const double> psi_tilde, double t);

/// Smallest K with K > max{ceil((pi^2 M / 4) / (M Gamma sum(zeta delta) + 1)), ceil(eps W)} + 1,
/// where delta = 1 - suppression.
int min_ports_vs_mrc(int antennas, double gamma, std::span<const double> interferer_zeta,
                     std::span<const double> delta, double epsilon, int aperture);

/// Aligned-phase worst case (delta = 0): max{ceil(pi^2 M / 4), ceil(eps W)} + 2.
int min_ports_noise_limited(int antennas, double epsilon, int aperture);

/// Gamma -> infinity with some delta > 0: ceil(eps W) + 2.
int min_ports_interference_limited(double epsilon, int aperture);

struct GainComparison {
  double cuma_gain = 0.0;
  double mrc_gain = 0.0;
  std::vector<double> delta;
  double epsilon = 7.0;
  int min_ports = 2;
};

GainComparison compare_gains(int ports, int antennas, double gamma,
                             std::span<const double> interferer_zeta,
                             std::span<const double> delta, double epsilon, int aperture);

/// Column-major complex M x U matrix; column u is user u's channel.
struct ChannelMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> data;

  ChannelMatrix(int m, int u) : rows(m), cols(u), data(static_cast<std::size_t>(m) * u) {}
  std::complex<double>& operator()(int r, int c) { return data[static_cast<std::size_t>(c) * rows + r]; }
  std::complex<double> operator()(int r, int c) const {
    return data[static_cast<std::size_t>(c) * rows + r];
  }
};

/// Half-wavelength uniform linear array LoS channel:
///   h_u[m] = sqrt(zeta_u) exp(j (psi_u + pi m cos_u)), m = 0..M-1.
ChannelMatrix los_channel(int antennas, std::span<const double> zeta, std::span<const double> psi,
                          std::span<const double> direction_cosine);

/// Per-user ZF SINR Gamma / [(H^H H)^-1]_uu through the SVD pseudo-inverse.
/// Returns nullopt when sigma_min < cutoff * sigma_max (combiner failure).
std::optional<std::vector<double>> zf_sinr_from_channel(const ChannelMatrix& h, double gamma,
                                                        double cutoff = 1e-8);

struct ZfOptions {
  double cutoff = 1e-8;
  /// Direction cosines drawn from [1 - spread, 1]; 0 is the identical-angle geometry.
  double direction_cosine_spread = 0.0;
};

struct ZfStats {
  long long trials = 0;
  long long failures = 0;
  double mean_sinr = 0.0;          // failed trials contribute 0
  double variance = 0.0;
  double mean_sinr_success = 0.0;  // over successful trials; 0 when none
  double cutoff = 1e-8;
};

/// Monte-Carlo ZF SINR of the desired user (index 0) over random phases.
ZfStats zf_sinr_mc(int antennas, const Scenario& scenario, long long trials, std::uint64_t seed,
                   const ZfOptions& options = {});

/// O-CUMA: single-user ergodic rate with the full band, prefactor B. The
/// scenario's user count is ignored.
MetricResult ocuma_rate(const Scenario& scenario, OutageForm form = OutageForm::kExact);

}  // namespace satcuma
