// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "thermolength/eos.hpp"
#include "thermolength/quadrature.hpp"

namespace thermolength {

/// Work per mole of a reversible isentropic volume change.
///
/// `w` is the traversal-signed change u(end) - u(start): positive when work is
/// done on the gas. w_in()/w_out() use the fixed labeling where v1 is the
/// smaller volume: W_in = u(v1) - u(v2), W_out = -W_in.
struct WorkResult {
  double w = 0.0;
  double u_initial = 0.0;
  double u_final = 0.0;
  double v_start = 0.0;
  double v_end = 0.0;

  double w_in() const { return v_start <= v_end ? -w : w; }
  double w_out() const { return -w_in(); }
};

WorkResult isentropic_work(const GasModel& model, double s, double v_start, double v_end);

/// |(u2 - u1) - (-integral of p dv)| with the integral done by quadrature.
double pressure_integral_check(const GasModel& model, double s, double v1, double v2,
                               const QuadratureConfig& cfg = {});

struct LemmaSides {
  double lhs = 0.0;  // (dL/dv)^2 = (d^2u/dv^2)_s, analytic
  double rhs = 0.0;  // d^2W/dv^2, central differences of W(v) = u(s, v) - u(s, v_ref)
};

/// Both sides of (dL/dv)^2 = d^2W/dv^2 on an isentrope. `v_ref` defaults to v.
/// Throws InstabilityError when (d^2u/dv^2)_s < 0.
LemmaSides lemma_check(const GasModel& model, double s, double v,
                       std::optional<double> v_ref = std::nullopt);

struct TheoremWork {
  double w_in = 0.0;
  double w_out = 0.0;
};

/// W_in = R L / (4 cp) [L + 4 sqrt(cp u2 / R)], with u2 the energy at the
/// larger volume. Ideal and QuasiIdeal only.
TheoremWork work_from_length(const GasModel& model, double length, double u2);

/// L^2 + 4 sqrt(cp u2 / R) L - 4 (cp/R) W_in
double theorem_residual_in(const GasModel& model, double length, double u2, double w_in);

/// L^2 + 4 sqrt(cp u2 / R) L + 4 (cp/R) W_out
double theorem_residual_out(const GasModel& model, double length, double u2, double w_out);

/// L = 2 sqrt(cp/R) (sqrt(u1) - sqrt(u2)) with u1 >= u2 > 0 (u1 at the
/// smaller volume). Ideal and QuasiIdeal only.
double length_from_work(const GasModel& model, double u1, double u2);

struct IsothermCheck {
  double work = 0.0;    // energy change between the two isotherm states
  double length = 0.0;  // sqrt(1/(R T)) * work
};

/// Energy change, and the matching length sqrt(1/(RT)) W, between two states
/// on the isotherm T. u depends on T alone for Ideal and QuasiIdeal gases, so
/// both vanish up to roundoff. Throws UnsupportedModel for other variants.
IsothermCheck isotherm_remark_check(const GasModel& model, double T, double v1, double v2);

}  // namespace thermolength
