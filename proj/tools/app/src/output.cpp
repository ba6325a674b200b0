/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "satcuma_app/output.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include <fmt/format.h>
#include "json.hpp"

namespace satcuma::app {

namespace {

constexpr const char* kColumns[] = {"series", "param", "x",     "metric", "value",
                                    "est_error", "warnings", "empirical", "ci_lo", "ci_hi"};

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

// Fields never contain commas or quotes except through user-chosen series names.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json json_number(const std::string& text) {
  if (text.empty() || text == "nan" || text == "inf" || text == "-inf") return nullptr;
  return std::strtod(text.c_str(), nullptr);
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  return fmt::format("{:.12g}", v);
}

void write_csv(std::ostream& out, const SweepResult& result) {
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
  for (const auto& r : result.rows) {
    out << csv_field(r.series) << ',' << r.param << ',' << format_number(r.x) << ',' << r.metric
        << ',' << format_number(r.value) << ',' << format_number(r.est_error) << ','
        << csv_field(r.warnings) << ',' << optional_number(r.empirical) << ','
        << optional_number(r.ci_lo) << ',' << optional_number(r.ci_hi) << '\n';
  }
}

void write_json(std::ostream& out, const SweepResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json row;
    row["series"] = r.series;
    row["param"] = r.param;
    row["x"] = json_number(format_number(r.x));
    row["metric"] = r.metric;
    row["value"] = json_number(format_number(r.value));
    row["est_error"] = json_number(format_number(r.est_error));
    row["warnings"] = r.warnings;
    row["empirical"] = json_number(optional_number(r.empirical));
    row["ci_lo"] = json_number(optional_number(r.ci_lo));
    row["ci_hi"] = json_number(optional_number(r.ci_hi));
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["columns"] = std::vector<std::string>(std::begin(kColumns), std::end(kColumns));
  doc["failed_rows"] = result.failed_rows;
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace satcuma::app
