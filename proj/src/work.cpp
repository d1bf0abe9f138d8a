// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermolength/work.hpp"

#include <cmath>
#include <sstream>

#include "thermolength/errors.hpp"
#include "thermolength/finite_difference.hpp"

namespace thermolength {

namespace {

void require_ideal_like(const GasModel& model, const char* what) {
  if (!model.is_ideal_like()) {
    std::ostringstream os;
    os << what << " only holds for ideal and quasi-ideal gases, not " << to_string(model.variant());
    throw UnsupportedModel(os.str());
  }
}

double cp_over_R(const GasModel& model) { return (model.cv() + model.R()) / model.R(); }

}  // namespace

WorkResult isentropic_work(const GasModel& model, double s, double v_start, double v_end) {
  WorkResult r;
  r.v_start = v_start;
  r.v_end = v_end;
  r.u_initial = internal_energy(model, {s, v_start});
  r.u_final = internal_energy(model, {s, v_end});
  r.w = r.u_final - r.u_initial;
  return r;
}

double pressure_integral_check(const GasModel& model, double s, double v1, double v2,
                               const QuadratureConfig& cfg) {
  const WorkResult w = isentropic_work(model, s, v1, v2);
  const QuadratureResult pv = integrate([&](double v) { return pressure(model, {s, v}); }, v1, v2, cfg);
  return std::abs(w.w + pv.value);
}

LemmaSides lemma_check(const GasModel& model, double s, double v, std::optional<double> v_ref) {
  model.check_state({s, v});
  const double ref = v_ref.value_or(v);
  model.check_state({s, ref});

  LemmaSides sides;
  sides.lhs = model.f1_second(v) * model.entropy_factor(s) - model.cv() * model.f2_second(v);
  if (sides.lhs < 0.0) {
    std::ostringstream os;
    os << "(d^2u/dv^2)_s = " << sides.lhs << " < 0 at (s=" << s << ", v=" << v
       << "): the isentropic length is not real there";
    throw InstabilityError(os.str());
  }
  const double u_ref = internal_energy(model, {s, ref});
  auto work = [&](double x) { return internal_energy(model, {s, x}) - u_ref; };
  sides.rhs = fd::second_derivative(work, v, fd::kSecondStep, model.lower_volume());
  return sides;
}

TheoremWork work_from_length(const GasModel& model, double length, double u2) {
  require_ideal_like(model, "the length-work theorem");
  if (!(length >= 0.0) || !std::isfinite(length)) {
    throw DomainError("length must be non-negative and finite");
  }
  if (!(u2 > 0.0) || !std::isfinite(u2)) throw DomainError("u2 must be positive and finite");
  const double k = cp_over_R(model);
  TheoremWork w;
  w.w_in = length / (4.0 * k) * (length + 4.0 * std::sqrt(k * u2));
  w.w_out = -w.w_in;
  return w;
}

double theorem_residual_in(const GasModel& model, double length, double u2, double w_in) {
  require_ideal_like(model, "the length-work theorem");
  const double k = cp_over_R(model);
  return length * length + 4.0 * std::sqrt(k * u2) * length - 4.0 * k * w_in;
}

double theorem_residual_out(const GasModel& model, double length, double u2, double w_out) {
  require_ideal_like(model, "the length-work theorem");
  const double k = cp_over_R(model);
  return length * length + 4.0 * std::sqrt(k * u2) * length + 4.0 * k * w_out;
}

double length_from_work(const GasModel& model, double u1, double u2) {
  require_ideal_like(model, "the length-energy corollary");
  if (!(u1 > 0.0) || !(u2 > 0.0) || !std::isfinite(u1) || !std::isfinite(u2)) {
    throw DomainError("energies must be positive and finite");
  }
  if (u1 < u2) {
    std::ostringstream os;
    os << "u1 = " << u1 << " must be the energy at the smaller volume (u1 >= u2 = " << u2 << ")";
    throw DomainError(os.str());
  }
  return 2.0 * std::sqrt(cp_over_R(model)) * (std::sqrt(u1) - std::sqrt(u2));
}

IsothermCheck isotherm_remark_check(const GasModel& model, double T, double v1, double v2) {
  require_ideal_like(model, "the isotherm energy argument");
  const double s1 = entropy_on_isotherm(model, T, v1);
  const double s2 = entropy_on_isotherm(model, T, v2);
  IsothermCheck r;
  r.work = internal_energy(model, {s2, v2}) - internal_energy(model, {s1, v1});
  r.length = std::sqrt(1.0 / (model.R() * T)) * r.work;
  return r;
}

}  // namespace thermolength
