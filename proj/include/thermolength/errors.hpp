// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace thermolength {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state or parameter lies outside the model's valid domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A thermodynamic coefficient is undefined (division by zero, non-positive compressibility).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The metric is not positive definite where a length was requested.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not meet its tolerance within the panel budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The operation has no closed form for this model variant.
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

}  // namespace thermolength
