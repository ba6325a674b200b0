/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "satcuma/error.hpp"

namespace satcuma {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw ConfigError(key, "expected a number, got an empty value");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(key, "expected a finite number, got '" + s + "'");
  }
  return v;
}

template <class T>
T parse_integer(const std::string& key, std::string_view text) {
  const std::string_view s = trim(text);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError(key, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << v;
  return os.str();
}

}  // namespace

KeyValueDoc KeyValueDoc::parse(std::string_view text) {
  KeyValueDoc doc;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ConfigError("", where + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("", where + ": empty key");
    if (doc.entries_.contains(key)) throw ConfigError(key, where + ": duplicate key");
    doc.entries_[key] = std::string(trim(line.substr(eq + 1)));
  }
  return doc;
}

KeyValueDoc KeyValueDoc::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::string& KeyValueDoc::at(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(key, "missing required key");
  return it->second;
}

void KeyValueDoc::set(const std::string& key, std::string value) {
  entries_[key] = std::move(value);
}

void KeyValueDoc::set_assignment(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("", "override '" + std::string(assignment) + "' is not key=value");
  }
  const std::string key(trim(assignment.substr(0, eq)));
  if (key.empty()) throw ConfigError("", "override '" + std::string(assignment) + "' has no key");
  set(key, std::string(trim(assignment.substr(eq + 1))));
}

double KeyValueDoc::get_double(const std::string& key) const { return parse_double(key, at(key)); }

long long KeyValueDoc::get_int(const std::string& key) const {
  return parse_integer<long long>(key, at(key));
}

std::uint64_t KeyValueDoc::get_u64(const std::string& key) const {
  return parse_integer<std::uint64_t>(key, at(key));
}

std::vector<double> KeyValueDoc::get_doubles(const std::string& key) const {
  std::vector<double> out;
  for (auto item : split_list(at(key))) out.push_back(parse_double(key, item));
  return out;
}

std::vector<std::string> KeyValueDoc::get_strings(const std::string& key) const {
  std::vector<std::string> out;
  for (auto item : split_list(at(key))) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

const std::vector<std::string>& ScenarioConfig::keys() {
  static const std::vector<std::string> k = {"K",        "W",      "U",          "P_watts",
                                             "G_dBi",    "B_hz",   "T_kelvin",   "f_c_hz",
                                             "distance_m", "seed"};
  return k;
}

ScenarioConfig ScenarioConfig::from_doc(const KeyValueDoc& doc, bool allow_unknown) {
  if (!allow_unknown) {
    for (const auto& [key, value] : doc.entries()) {
      if (std::find(keys().begin(), keys().end(), key) == keys().end()) {
        throw ConfigError(key, "unknown scenario key");
      }
    }
  }
  ScenarioConfig c;
  auto int_field = [&](const char* key, int& target) {
    if (!doc.contains(key)) return;
    const long long v = doc.get_int(key);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw ConfigError(key, "value out of range");
    }
    target = static_cast<int>(v);
  };
  auto double_field = [&](const char* key, double& target) {
    if (doc.contains(key)) target = doc.get_double(key);
  };
  int_field("K", c.ports);
  int_field("W", c.aperture);
  int_field("U", c.users);
  double_field("P_watts", c.power_w);
  double_field("G_dBi", c.gain_dbi);
  double_field("B_hz", c.bandwidth_hz);
  double_field("T_kelvin", c.temperature_k);
  double_field("f_c_hz", c.carrier_hz);
  if (doc.contains("distance_m")) c.distance_m = doc.get_doubles("distance_m");
  if (doc.contains("seed")) c.seed = doc.get_u64("seed");
  return c;
}

void ScenarioConfig::write(KeyValueDoc& doc) const {
  doc.set("K", std::to_string(ports));
  doc.set("W", std::to_string(aperture));
  doc.set("U", std::to_string(users));
  doc.set("P_watts", format_double(power_w));
  doc.set("G_dBi", format_double(gain_dbi));
  doc.set("B_hz", format_double(bandwidth_hz));
  doc.set("T_kelvin", format_double(temperature_k));
  doc.set("f_c_hz", format_double(carrier_hz));
  std::string d;
  for (double r : distance_m) {
    if (!d.empty()) d += ", ";
    d += format_double(r);
  }
  doc.set("distance_m", d);
  doc.set("seed", std::to_string(seed));
}

Scenario build_scenario(const ScenarioConfig& config) {
  const AntennaConfig antenna(config.ports, config.aperture);
  if (config.users < 1) throw ConfigError("U", "user count must be >= 1");

  LinkBudget budget;
  budget.power_w = config.power_w;
  budget.gain = db_to_linear(config.gain_dbi);
  budget.bandwidth_hz = config.bandwidth_hz;
  budget.temperature_k = config.temperature_k;
  budget.carrier_hz = config.carrier_hz;
  budget.validate();

  const auto users = static_cast<std::size_t>(config.users);
  if (config.distance_m.size() != 1 && config.distance_m.size() != users) {
    throw ConfigError("distance_m", "expected one distance or one per user (" +
                                        std::to_string(users) + "), got " +
                                        std::to_string(config.distance_m.size()));
  }
  UserField field;
  for (std::size_t i = 0; i < users; ++i) {
    const double r = config.distance_m.size() == 1 ? config.distance_m[0] : config.distance_m[i];
    if (!(r > 0.0)) throw ConfigError("distance_m", "distances must be positive");
    field.zeta.push_back(path_loss_coeff(budget.carrier_hz, r, budget.speed_of_light));
    field.psi.push_back(reference_phase(config.seed, static_cast<int>(i)));
  }
  return Scenario::assemble(antenna, budget, std::move(field), config.seed);
}

Scenario load_scenario(const std::filesystem::path& path) {
  return build_scenario(ScenarioConfig::from_doc(KeyValueDoc::load(path)));
}

}  // namespace satcuma
