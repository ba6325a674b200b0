/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "satcuma/scenario.hpp"

namespace satcuma::app {

/// Compact forms under test. Defaults are the library's; tests swap in a
/// corrupted version to make sure the equivalence checks can fail.
struct ValidateHooks {
  std::function<double(double psi_u, double zeta_u, const AntennaConfig&)> signal_power;
  std::function<double(double psi_tilde, double zeta, double t, const AntennaConfig&)>
      interference_power;

  static ValidateHooks library();
};

struct ValidateOptions {
  long long trials = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Trials re-evaluated through the compact forms (first n of the batch).
  long long compact_trials = 100'000;
  /// User count of the aggregate-interference fit.
  int beta_users = 20;
};

enum class CheckStatus { kPass, kFail, kExpectedFail, kInfo, kSkip };

struct CheckResult {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  CheckStatus status = CheckStatus::kPass;
  std::string note;
};

struct ValidateReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::vector<std::string> failed() const;
};

ValidateReport run_validate(const Scenario& scenario, const ValidateOptions& options,
                            const ValidateHooks& hooks = ValidateHooks::library());

std::string status_name(CheckStatus s);

/// Fixed-width table, one line per check, then a summary line.
void write_validate_table(std::ostream& out, const Scenario& scenario, const ValidateOptions& options,
                          const ValidateReport& report);

}  // namespace satcuma::app
