/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <iosfwd>
#include <string>

#include "satcuma_app/sweep.hpp"

namespace satcuma::app {

/// Plain decimal with 12 significant digits; "nan"/"inf" for non-finite values.
std::string format_number(double v);

void write_csv(std::ostream& out, const SweepResult& result);

/// Same columns as the CSV; numbers are the CSV strings re-read, absent values null.
void write_json(std::ostream& out, const SweepResult& result);

}  // namespace satcuma::app
