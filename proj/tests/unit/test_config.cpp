/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include "satcuma/config.hpp"
#include "satcuma/error.hpp"

using namespace satcuma;

TEST(KeyValueDoc, ParsesCommentsAndLists) {
  const auto doc = KeyValueDoc::parse(
      "# scenario\n"
      "K = 61   # ports\n"
      "\n"
      "distance_m = 1.2e6, 1.3e6\n"
      "metrics = outage_exact,mean_sinr\n");
  EXPECT_EQ(doc.get_int("K"), 61);
  EXPECT_EQ(doc.get_doubles("distance_m"), (std::vector<double>{1.2e6, 1.3e6}));
  EXPECT_EQ(doc.get_strings("metrics"), (std::vector<std::string>{"outage_exact", "mean_sinr"}));
}

TEST(KeyValueDoc, Errors) {
  EXPECT_THROW(KeyValueDoc::parse("K 3\n"), ConfigError);
  EXPECT_THROW(KeyValueDoc::parse("K = 3\nK = 4\n"), ConfigError);
  const auto doc = KeyValueDoc::parse("K = 3x\nB = abc\n");
  EXPECT_THROW(doc.get_int("K"), ConfigError);
  EXPECT_THROW(doc.get_double("B"), ConfigError);
  EXPECT_THROW(doc.at("missing"), ConfigError);
}

TEST(KeyValueDoc, Overrides) {
  auto doc = KeyValueDoc::parse("K = 21\n");
  doc.set_assignment("K=61");
  doc.set_assignment(" W = 3 ");
  EXPECT_EQ(doc.get_int("K"), 61);
  EXPECT_EQ(doc.get_int("W"), 3);
  EXPECT_THROW(doc.set_assignment("novalue"), ConfigError);
}

TEST(ScenarioConfig, UnknownKeyIsNamed) {
  const auto doc = KeyValueDoc::parse("K = 21\nfoo = 1\n");
  try {
    ScenarioConfig::from_doc(doc);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "foo");
  }
  EXPECT_NO_THROW(ScenarioConfig::from_doc(doc, true));
}

TEST(ScenarioConfig, BuildsReferenceScenario) {
  const Scenario s = build_scenario(ScenarioConfig{});
  EXPECT_EQ(s.users.users(), 5);
  EXPECT_NEAR(s.users.desired_zeta() / 4.39153831569711e-19, 1.0, 1e-12);
  EXPECT_NEAR(s.derived.gamma / 3.49813024938171e17, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(s.antenna.mu(), 10.0);
  for (double p : s.users.psi) {
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 6.283185307179586);
  }
}

TEST(ScenarioConfig, FieldErrors) {
  auto expect_field = [](const std::string& text, const std::string& field) {
    try {
      build_scenario(ScenarioConfig::from_doc(KeyValueDoc::parse(text)));
      ADD_FAILURE() << "expected ConfigError for " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), field) << text;
    }
  };
  expect_field("K = 1\n", "K");
  expect_field("W = 0\n", "W");
  expect_field("U = 0\n", "U");
  expect_field("B_hz = -5\n", "B_hz");
  expect_field("U = 3\ndistance_m = 1e6, 2e6\n", "distance_m");
}

TEST(ScenarioConfig, OddMuWarns) {
  ScenarioConfig c;
  c.ports = 10;
  c.aperture = 3;
  EXPECT_TRUE(build_scenario(c).warnings.has(Warning::kOddMu));
}

TEST(ScenarioConfig, WriteRoundTrips) {
  ScenarioConfig c;
  c.ports = 61;
  c.aperture = 3;
  c.users = 2;
  c.distance_m = {1.2e6, 1.5e6};
  c.seed = 99;
  KeyValueDoc doc;
  c.write(doc);
  const ScenarioConfig back = ScenarioConfig::from_doc(doc);
  EXPECT_EQ(back.ports, 61);
  EXPECT_EQ(back.distance_m, c.distance_m);
  EXPECT_EQ(back.seed, 99u);
  EXPECT_DOUBLE_EQ(back.gain_dbi, c.gain_dbi);
}

TEST(Warnings, ToString) {
  WarningSet w;
  EXPECT_EQ(w.to_string(), "");
  w.set(Warning::kClamped).set(Warning::kOddMu);
  EXPECT_EQ(w.to_string(), "odd_mu|clamped");
  EXPECT_TRUE((WarningSet(Warning::kQuadratureLimit) | w).has(Warning::kQuadratureLimit));
}
