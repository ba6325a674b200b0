/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <sstream>

#include "satcuma/config.hpp"
#include "satcuma/cuma.hpp"
#include "satcuma_app/validate.hpp"

using namespace satcuma;
using namespace satcuma::app;

namespace {

Scenario scenario(int ports) {
  ScenarioConfig c;
  c.ports = ports;
  return build_scenario(c);
}

const CheckResult& check(const ValidateReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error(name);
}

ValidateOptions small() {
  ValidateOptions o;
  o.trials = 20'000;
  o.compact_trials = 5'000;
  o.workers = 2;
  return o;
}

}  // namespace

TEST(Validate, CorruptedCompactFormIsCaught) {
  ValidateHooks hooks = ValidateHooks::library();
  hooks.signal_power = [](double psi, double zeta, const AntennaConfig& cfg) {
    return 1.01 * signal_power_compact(psi, zeta, cfg);
  };
  const auto r = run_validate(scenario(21), small(), hooks);
  EXPECT_EQ(check(r, "compact_signal_rel_err").status, CheckStatus::kFail);
  EXPECT_EQ(check(r, "compact_interference_rel_err").status, CheckStatus::kPass);
  EXPECT_FALSE(r.passed());
  const auto failed = r.failed();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "compact_signal_rel_err"), failed.end());
}

TEST(Validate, LibraryCompactFormsPass) {
  const auto r = run_validate(scenario(21), small());
  EXPECT_EQ(check(r, "compact_signal_rel_err").status, CheckStatus::kPass);
  EXPECT_EQ(check(r, "compact_interference_rel_err").status, CheckStatus::kPass);
  EXPECT_EQ(check(r, "activated_count_mismatch").status, CheckStatus::kPass);
  EXPECT_EQ(check(r, "k2_residual_over_bound").status, CheckStatus::kPass);
}

TEST(Validate, SmallMuCompactSinrIsExpectedFail) {
  const auto r = run_validate(scenario(9), small());
  EXPECT_EQ(check(r, "ks_sinr_compact").status, CheckStatus::kExpectedFail);
  EXPECT_EQ(check(r, "ks_sinr_exact").status, CheckStatus::kPass);
  EXPECT_DOUBLE_EQ(check(r, "ks_sinr_exact").threshold, 0.015);
}

TEST(Validate, OddMuChecksAreInformational) {
  const auto r = run_validate(scenario(11), small());
  for (const char* name : {"compact_signal_rel_err", "activated_count_mismatch", "ks_alpha"}) {
    const auto s = check(r, name).status;
    EXPECT_TRUE(s == CheckStatus::kInfo || s == CheckStatus::kExpectedFail) << name;
  }
}

TEST(Validate, TableIsDeterministic) {
  auto table = [](int workers) {
    ValidateOptions o = small();
    o.workers = workers;
    const Scenario sc = scenario(21);
    std::ostringstream os;
    write_validate_table(os, sc, o, run_validate(sc, o));
    return os.str();
  };
  EXPECT_EQ(table(1), table(8));
}
