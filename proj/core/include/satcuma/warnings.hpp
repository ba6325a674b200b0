/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <string>

namespace satcuma {

enum class Warning : std::uint8_t {
  kOddMu = 1u << 0,            // port density is not an even integer
  kClamped = 1u << 1,          // probability clamped into [0, 1]
  kQuadratureLimit = 1u << 2,  // subdivision budget exhausted before tolerance
  kDegeneratePhase = 1u << 3,  // reference phase on a port-sign boundary
};

/// Small bit set of `Warning` flags propagated from lower modules to output rows.
class WarningSet {
 public:
  constexpr WarningSet() = default;
  constexpr WarningSet(Warning w) : bits_(static_cast<std::uint8_t>(w)) {}  // NOLINT

  constexpr bool has(Warning w) const { return (bits_ & static_cast<std::uint8_t>(w)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr WarningSet& set(Warning w) {
    bits_ |= static_cast<std::uint8_t>(w);
    return *this;
  }
  constexpr WarningSet& merge(WarningSet other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend constexpr WarningSet operator|(WarningSet a, WarningSet b) { return a.merge(b); }
  friend constexpr bool operator==(WarningSet a, WarningSet b) = default;

  /// "odd_mu|clamped", or "" when empty.
  std::string to_string() const;

 private:
  std::uint8_t bits_ = 0;
};

}  // namespace satcuma
