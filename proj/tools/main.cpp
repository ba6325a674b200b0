/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

// satcuma: parameter sweeps, validation and reports for CUMA satellite uplinks.
// Exit codes: 0 success, 1 runtime or metric failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satcuma/config.hpp"
#include "satcuma/error.hpp"
#include "satcuma_app/output.hpp"
#include "satcuma_app/presets.hpp"
#include "satcuma_app/report.hpp"
#include "satcuma_app/sweep.hpp"
#include "satcuma_app/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Args {
  std::string spec;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<long long> trials;
  std::string out;
  std::string format = "csv";
  std::vector<std::string> sets;
  int workers = 1;
};

satcuma::KeyValueDoc load_doc(const Args& a, bool require_source) {
  if (!a.spec.empty() && !a.preset.empty()) {
    throw satcuma::ConfigError("", "--spec and --preset are mutually exclusive");
  }
  satcuma::KeyValueDoc doc;
  if (!a.spec.empty()) {
    doc = satcuma::KeyValueDoc::load(a.spec);
  } else if (!a.preset.empty()) {
    doc = satcuma::app::preset_doc(a.preset);
  } else if (require_source) {
    throw satcuma::ConfigError("", "one of --spec or --preset is required");
  }
  for (const auto& s : a.sets) doc.set_assignment(s);
  return doc;
}

// Output is assembled in memory and written once so reruns are byte-identical.
void emit(const Args& a, const std::string& text) {
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw satcuma::Error("cannot write '" + a.out + "'");
  f << text;
}

int run_sweep_cmd(const Args& a) {
  const satcuma::app::SweepSpec spec = satcuma::app::SweepSpec::from_doc(load_doc(a, true));
  satcuma::app::RunOptions opt;
  opt.workers = a.workers;
  opt.trials = a.trials;
  opt.seed = a.seed;
  const auto result = satcuma::app::run_sweep(spec, opt);
  std::ostringstream os;
  if (a.format == "json") {
    satcuma::app::write_json(os, result);
  } else {
    satcuma::app::write_csv(os, result);
  }
  emit(a, os.str());
  if (result.failed_rows > 0) {
    std::cerr << "satcuma: " << result.failed_rows << " row(s) failed; see the warnings column\n";
    return kFailure;
  }
  return kOk;
}

int run_validate_cmd(const Args& a) {
  if (!a.preset.empty()) throw satcuma::ConfigError("preset", "validate takes a scenario --spec");
  const satcuma::KeyValueDoc doc = load_doc(a, false);
  const satcuma::ScenarioConfig cfg = satcuma::ScenarioConfig::from_doc(doc);
  const satcuma::Scenario scenario = satcuma::build_scenario(cfg);
  satcuma::app::ValidateOptions opt;
  opt.seed = a.seed.value_or(cfg.seed);
  if (a.trials) {
    if (*a.trials < 1) throw satcuma::ConfigError("trials", "must be >= 1");
    opt.trials = *a.trials;
  }
  opt.workers = a.workers;
  const auto report = satcuma::app::run_validate(scenario, opt);
  std::ostringstream os;
  satcuma::app::write_validate_table(os, scenario, opt, report);
  emit(a, os.str());
  if (!report.passed()) {
    std::cerr << "satcuma: failed checks:";
    for (const auto& f : report.failed()) std::cerr << ' ' << f;
    std::cerr << '\n';
    return kFailure;
  }
  return kOk;
}

int run_report_cmd(const Args& a) {
  const satcuma::KeyValueDoc doc = load_doc(a, false);
  std::ostringstream os;
  if (doc.contains("sweep")) {
    satcuma::app::write_sweep_report(os, satcuma::app::SweepSpec::from_doc(doc));
  } else {
    satcuma::app::write_scenario_report(os, satcuma::build_scenario(satcuma::ScenarioConfig::from_doc(doc)));
  }
  emit(a, os.str());
  return kOk;
}

void add_common(CLI::App* cmd, Args& a, bool sweep_flags) {
  cmd->add_option("--spec", a.spec, "Scenario or sweep file (key = value)");
  cmd->add_option("--set", a.sets, "Override a key (key=value), repeatable");
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  if (sweep_flags) {
    cmd->add_option("--preset", a.preset, "Built-in sweep: fig3 .. fig11")
        ->check(CLI::IsMember(satcuma::app::preset_names()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"satcuma: CUMA satellite uplink sweeps, validation and reports"};
  app.require_subcommand(1);
  Args a;

  auto* sweep = app.add_subcommand("sweep", "Evaluate metrics over a parameter grid");
  add_common(sweep, a, true);
  sweep->add_option("--seed", a.seed, "Master seed (phases and Monte-Carlo)");
  sweep->add_option("--trials", a.trials, "Monte-Carlo trials per grid point (0 = analytic only)");
  sweep->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--workers", a.workers, "Concurrent grid points")->check(CLI::Range(1, 256));

  auto* validate = app.add_subcommand("validate", "Run the analytic-vs-simulation check suite");
  add_common(validate, a, false);
  validate->add_option("--seed", a.seed, "Monte-Carlo seed (default: scenario seed)");
  validate->add_option("--trials", a.trials, "Monte-Carlo trials (default 1000000)");
  validate->add_option("--workers", a.workers, "Simulation threads")->check(CLI::Range(1, 256));

  auto* report = app.add_subcommand("report", "Summarize a scenario or a sweep");
  add_common(report, a, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sweep->parsed()) return run_sweep_cmd(a);
    if (validate->parsed()) return run_validate_cmd(a);
    return run_report_cmd(a);
  } catch (const satcuma::ConfigError& e) {
    std::cerr << "satcuma: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "satcuma: " << e.what() << '\n';
    return kFailure;
  }
}
