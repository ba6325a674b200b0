/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "satcuma/config.hpp"

namespace satcuma::app {

/// fig3 .. fig11.
const std::vector<std::string>& preset_names();

/// The sweep document of a preset. Throws ConfigError for an unknown name.
KeyValueDoc preset_doc(const std::string& name);

}  // namespace satcuma::app
