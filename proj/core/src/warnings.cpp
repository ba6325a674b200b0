/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/warnings.hpp"

#include <array>
#include <utility>

namespace satcuma {

std::string WarningSet::to_string() const {
  static constexpr std::array<std::pair<Warning, const char*>, 4> kNames = {{
      {Warning::kOddMu, "odd_mu"},
      {Warning::kClamped, "clamped"},
      {Warning::kQuadratureLimit, "quadrature_limit"},
      {Warning::kDegeneratePhase, "degenerate_phase"},
  }};
  std::string out;
  for (const auto& [flag, name] : kNames) {
    if (!has(flag)) continue;
    if (!out.empty()) out += '|';
    out += name;
  }
  return out;
}

}  // namespace satcuma
