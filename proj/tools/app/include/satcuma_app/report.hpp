/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <iosfwd>

#include "satcuma/scenario.hpp"
#include "satcuma_app/sweep.hpp"

namespace satcuma::app {

/// Link budget, derived channel quantities and headline metrics of a scenario.
void write_scenario_report(std::ostream& out, const Scenario& scenario, double gamma = 0.35);

/// What a sweep will evaluate: parameter, grid, series overrides and metrics.
void write_sweep_report(std::ostream& out, const SweepSpec& spec);

}  // namespace satcuma::app
