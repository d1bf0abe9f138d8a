// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "thermolength/eos.hpp"

namespace thermolength {

/// Symmetric 2x2 Weinhold metric in (s, v) coordinates.
struct MetricTensor {
  double g_ss = 0.0;
  double g_sv = 0.0;
  double g_vv = 0.0;
  /// False when the tensor is not positive definite (unstable VdW states).
  bool stable = true;

  double determinant() const { return g_ss * g_vv - g_sv * g_sv; }
};

/// Hessian of u(s, v) from the analytic derivatives of f1 and f2.
MetricTensor metric_from_hessian(const GasModel& model, const State& state);

/// (1/cv) [[T, -T alpha/kappa_T], [-T alpha/kappa_T, cp/(v kappa_T)]].
/// Throws SingularityError if kappa_T <= 0.
MetricTensor metric_from_coefficients(const ThermoPoint& tp, double v);

/// Hessian of u by central differences of internal_energy. Test oracle.
MetricTensor metric_from_finite_differences(const GasModel& model, const State& state);

/// Squared line element g_ss ds^2 + 2 g_sv ds dv + g_vv dv^2.
struct LineElement {
  double value = 0.0;
  bool negative = false;
};

LineElement line_element(const MetricTensor& m, double ds, double dv);

}  // namespace thermolength
