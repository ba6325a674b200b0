/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma_app/presets.hpp"

#include <map>

#include "satcuma/error.hpp"

namespace satcuma::app {

namespace {

// Link budget and geometry not listed here are the scenario defaults
// (30 GHz, 10 MHz, 1 W, 40 dBi, 207 K, 1200 km).
const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> p = {
      {"fig3", R"(
name = fig3
sweep = mu
grid = 2:1:20
W = 2
U = 5
gamma = 0.35
M = 15
metrics = outage_exact, outage_compact, mean_sinr, mrc_sinr, zf_sinr
)"},
      {"fig4", R"(
name = fig4
sweep = K
grid = 9:8:81
gamma = 0.35
series = W2_U5, W4_U5, W2_U10
series.W2_U5 = W=2; U=5
series.W4_U5 = W=4; U=5
series.W2_U10 = W=2; U=10
metrics = outage_exact, outage_compact, mean_sinr
)"},
      {"fig5", R"(
name = fig5
sweep = U
grid = 2:1:20
gamma = 0.35
series = mu5, mu10
series.mu5 = K=11; W=2
series.mu10 = K=21; W=2
metrics = outage_exact, outage_compact, mean_sinr
)"},
      {"fig6", R"(
name = fig6
sweep = threshold
grid = 0:0.01:1
U = 2
series = mu4, mu6, mu10
series.mu4 = K=9; W=2
series.mu6 = K=13; W=2
series.mu10 = K=21; W=2
metrics = cdf_alpha, cdf_y
)"},
      {"fig7", R"(
name = fig7
sweep = B
grid = 1e6, 2e6, 5e6, 1e7, 2e7, 5e7, 1e8, 2e8, 5e8, 1e9
K = 61
W = 3
series = U5, U20
series.U5 = U=5
series.U20 = U=20
metrics = rate_exact, rate_ocuma, mean_snr
)"},
      {"fig8", R"(
name = fig8
sweep = mu
grid = 2:2:120
W = 3
series = B10M_U5, B10M_U20, B20M_U5, B20M_U20
series.B10M_U5 = B_hz=1e7; U=5
series.B10M_U20 = B_hz=1e7; U=20
series.B20M_U5 = B_hz=2e7; U=5
series.B20M_U20 = B_hz=2e7; U=20
metrics = rate_exact, rate_ocuma, mean_snr
)"},
      {"fig9", R"(
name = fig9
sweep = U
grid = 1:1:20
W = 3
series = mu10, mu50
series.mu10 = K=31
series.mu50 = K=151
metrics = rate_exact, rate_ocuma
)"},
      {"fig10", R"(
name = fig10
sweep = K
grid = 8:1:100
W = 3
U = 1
M = 18
epsilon = 7
metrics = mean_snr, mean_snr_large_mu, mrc_snr
)"},
      {"fig11", R"(
name = fig11
sweep = psi_tilde
grid = 0:0.0314159265358979:6.28318530717959
K = 51
W = 5
U = 2
psi_u = 3.14159265358979
metrics = interferer_gain, signal_gain, suppression
)"},
  };
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig3", "fig4", "fig5",  "fig6", "fig7",
                                                 "fig8", "fig9", "fig10", "fig11"};
  return names;
}

KeyValueDoc preset_doc(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("preset", "unknown preset '" + name + "'");
  return KeyValueDoc::parse(it->second);
}

}  // namespace satcuma::app
