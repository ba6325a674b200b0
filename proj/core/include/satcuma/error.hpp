/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, satcuma contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace satcuma {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument outside the domain of a formula (non-positive distance, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Scenario or sweep configuration that fails to parse or violates an invariant.
/// `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Adaptive quadrature that could not reach its tolerance. Carries the partial
/// estimate and the error bound that was achieved.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double partial, double achieved_error)
      : Error(what), partial_(partial), achieved_error_(achieved_error) {}

  double partial() const noexcept { return partial_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double partial_;
  double achieved_error_;
};

}  // namespace satcuma
