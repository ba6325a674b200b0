/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <numbers>

namespace satcuma {

/// SplitMix64 finalizer. Used both as a stream generator and as the hash that
/// derives per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stream seed of trial `index` under `master_seed`:
///   trial_seed = mix64(master_seed ^ mix64(index + golden))
/// Any trial can be regenerated on its own, so results do not depend on how
/// trials are partitioned across workers.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  return mix64(master_seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform on the open interval (0, 1); exact 0 is rejected.
  constexpr double uniform_open() {
    for (;;) {
      const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  /// Reference-port phase, uniform on the open interval (0, 2*pi).
  constexpr double phase() {
    for (;;) {
      const double psi = 2.0 * std::numbers::pi * uniform_open();
      if (psi > 0.0 && psi < 2.0 * std::numbers::pi) return psi;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace satcuma
