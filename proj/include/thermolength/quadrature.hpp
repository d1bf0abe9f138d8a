// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace thermolength {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  /// Throws DomainError for non-positive tolerances or a zero panel budget.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int panels_used = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol |I|). Panels are summed in
/// left-to-right order, so results are deterministic.
/// Throws ConvergenceError when the panel budget runs out. b < a is allowed
/// and flips the sign.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

}  // namespace thermolength
