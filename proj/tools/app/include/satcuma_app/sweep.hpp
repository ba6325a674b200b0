/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satcuma/config.hpp"

namespace satcuma::app {

enum class SweepParam { kMu, kK, kU, kB, kGamma, kW, kThreshold, kPsiTilde };

SweepParam parse_sweep_param(const std::string& name);
std::string sweep_param_name(SweepParam p);

/// Metrics a sweep can request.
const std::vector<std::string>& metric_names();

/// One named curve: `series.<name> = key=value; key=value` overrides applied
/// on top of the base document.
struct SeriesSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> overrides;
};

/// Parsed sweep document: scenario keys plus
///   sweep, grid, metrics, series, series.<name>, gamma, M, epsilon, psi_u,
///   psi_tilde, trials, zf_trials, zf_spread.
/// `grid` is a comma list, or `start:step:stop` (inclusive).
struct SweepSpec {
  std::string name;
  SweepParam param = SweepParam::kMu;
  std::vector<double> grid;
  std::vector<std::string> metrics;
  std::vector<SeriesSpec> series;
  KeyValueDoc base;

  /// Validates every key, the grid and each (series, grid point) pair.
  /// Throws ConfigError naming the offending key.
  static SweepSpec from_doc(const KeyValueDoc& doc);

  static const std::vector<std::string>& sweep_keys();
};

std::vector<double> parse_grid(const std::string& text);

struct SweepRow {
  std::string series;
  std::string param;
  double x = 0.0;
  std::string metric;
  double value = 0.0;
  double est_error = 0.0;
  std::string warnings;
  std::optional<double> empirical;
  std::optional<double> ci_lo;
  std::optional<double> ci_hi;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Rows whose metric threw; their value is NaN and warnings carry "failed".
  int failed_rows = 0;
};

struct RunOptions {
  int workers = 1;
  /// Overrides the document's `trials` when set.
  std::optional<long long> trials;
  std::optional<std::uint64_t> seed;
};

/// Evaluates every (series, grid point) concurrently and gathers rows in
/// series, grid, metric order.
SweepResult run_sweep(const SweepSpec& spec, const RunOptions& options = {});

}  // namespace satcuma::app
