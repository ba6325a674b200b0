/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "satcuma/scenario.hpp"

namespace satcuma {

/// Flat `key = value` document. `#` starts a comment, blank lines are
/// ignored, duplicate keys are an error. Lists are comma separated.
class KeyValueDoc {
 public:
  static KeyValueDoc parse(std::string_view text);
  static KeyValueDoc load(const std::filesystem::path& path);

  bool contains(const std::string& key) const { return entries_.contains(key); }
  const std::string& at(const std::string& key) const;
  /// Inserts or replaces (used for `--set key=value` overrides).
  void set(const std::string& key, std::string value);
  /// Parses "key=value".
  void set_assignment(std::string_view assignment);
  void erase(const std::string& key) { entries_.erase(key); }

  const std::map<std::string, std::string>& entries() const { return entries_; }

  double get_double(const std::string& key) const;
  long long get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;

 private:
  std::map<std::string, std::string> entries_;
};

/// Raw scenario configuration as written in a scenario file. Defaults are the
/// reference LEO uplink: 30 GHz, 10 MHz, 1 W, 40 dBi, 1200 km, 207 K, with
/// K = 21, W = 2 (mu = 10) and U = 5.
struct ScenarioConfig {
  int ports = 21;
  int aperture = 2;
  int users = 5;
  double power_w = 1.0;
  double gain_dbi = 40.0;
  double bandwidth_hz = 10e6;
  double temperature_k = 207.0;
  double carrier_hz = 30e9;
  std::vector<double> distance_m{1.2e6};  // one value, or one per user
  std::uint64_t seed = 1;

  static const std::vector<std::string>& keys();

  /// Reads the scenario keys from `doc`. With `allow_unknown` false any other
  /// key is a ConfigError.
  static ScenarioConfig from_doc(const KeyValueDoc& doc, bool allow_unknown = false);
  void write(KeyValueDoc& doc) const;
};

/// Validates `config` and builds the scenario: dBi converted to linear gain,
/// path loss per user, reference phases drawn from `seed`. A non-even mu is
/// allowed and recorded as Warning::kOddMu.
Scenario build_scenario(const ScenarioConfig& config);

Scenario load_scenario(const std::filesystem::path& path);

}  // namespace satcuma
