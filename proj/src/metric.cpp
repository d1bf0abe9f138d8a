// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermolength/metric.hpp"

#include <limits>
#include <sstream>

#include "thermolength/errors.hpp"
#include "thermolength/finite_difference.hpp"

namespace thermolength {

namespace {

MetricTensor with_stability(MetricTensor m) {
  m.stable = m.g_ss > 0.0 && m.determinant() > 0.0;
  return m;
}

}  // namespace

MetricTensor metric_from_hessian(const GasModel& model, const State& state) {
  model.check_state(state);
  const double e = model.entropy_factor(state.s);
  const double cv = model.cv();
  MetricTensor m;
  m.g_ss = model.f1(state.v) * e / (cv * cv);
  m.g_sv = model.f1_prime(state.v) * e / cv;
  m.g_vv = model.f1_second(state.v) * e - cv * model.f2_second(state.v);
  return with_stability(m);
}

MetricTensor metric_from_coefficients(const ThermoPoint& tp, double v) {
  if (!(tp.kappa_t > 0.0)) {
    std::ostringstream os;
    os << "isothermal compressibility " << tp.kappa_t << " is not positive";
    throw SingularityError(os.str());
  }
  MetricTensor m;
  m.g_ss = tp.T / tp.cv;
  m.g_sv = -tp.T * tp.alpha / (tp.cv * tp.kappa_t);
  m.g_vv = tp.cp / (v * tp.cv * tp.kappa_t);
  return with_stability(m);
}

MetricTensor metric_from_finite_differences(const GasModel& model, const State& state) {
  model.check_state(state);
  const double lower = model.lower_volume();
  const double s = state.s;
  const double v = state.v;
  MetricTensor m;
  const double inf = std::numeric_limits<double>::infinity();
  m.g_ss = fd::second_derivative(
      [&](double x) { return internal_energy(model, {x, v}); }, s, fd::kSecondStep, -inf,
      model.cv());
  m.g_vv = fd::second_derivative(
      [&](double x) { return internal_energy(model, {s, x}); }, v, fd::kSecondStep, lower);
  m.g_sv = fd::mixed_derivative(
      [&](double x, double y) { return internal_energy(model, {x, y}); }, s, v, fd::kSecondStep,
      lower, model.cv());
  return with_stability(m);
}

LineElement line_element(const MetricTensor& m, double ds, double dv) {
  LineElement q;
  q.value = m.g_ss * ds * ds + 2.0 * m.g_sv * ds * dv + m.g_vv * dv * dv;
  q.negative = q.value < 0.0;
  return q;
}

}  // namespace thermolength
