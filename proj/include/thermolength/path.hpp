// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "thermolength/eos.hpp"
#include "thermolength/quadrature.hpp"

namespace thermolength {

// Segment kinds. Each is parametrized on xi in [0, 1], start to end.

/// Constant entropy, volume linear in xi.
struct Isentrope {
  double s = 0.0;
  double v_start = 1.0;
  double v_end = 1.0;
};

/// Constant volume, entropy linear in xi.
struct Isochore {
  double v = 1.0;
  double s_start = 0.0;
  double s_end = 0.0;
};

/// Constant temperature, volume linear in xi; s(v) from the exact inverse of T(s, v).
struct Isotherm {
  double T = 1.0;
  double v_start = 1.0;
  double v_end = 1.0;
};

/// Straight line in (s, v).
struct LinearSV {
  State start;
  State end;
};

using Segment = std::variant<Isentrope, Isochore, Isotherm, LinearSV>;

/// Position on a segment and its xi-derivative.
struct SegmentPoint {
  State state;
  double ds = 0.0;
  double dv = 0.0;
};

SegmentPoint evaluate(const GasModel& model, const Segment& segment, double xi);
State segment_start(const GasModel& model, const Segment& segment);
State segment_end(const GasModel& model, const Segment& segment);
Segment reversed(const Segment& segment);
std::string_view kind_name(const Segment& segment);

/// Ordered, connected chain of segments.
class Path {
 public:
  /// Largest endpoint mismatch tolerated between consecutive segments,
  /// relative to max(1, |coordinate|).
  static constexpr double kJoinTolerance = 1e-12;

  Path() = default;
  explicit Path(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  Path& append(Segment segment) {
    segments_.push_back(std::move(segment));
    return *this;
  }

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }

  Path reversed() const;

  /// Throws DomainError if an endpoint leaves the model's domain or two
  /// consecutive segments do not join.
  void validate(const GasModel& model) const;

 private:
  std::vector<Segment> segments_;
};

struct LengthResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int panels_used = 0;
};

/// Integral of sqrt(g(x', x')) over every segment, using the Hessian metric.
/// Throws DomainError, InstabilityError (metric not positive definite on the
/// path) or ConvergenceError.
LengthResult path_length(const GasModel& model, const Path& path, const QuadratureConfig& cfg = {});

/// +1 when v_end > v_start, -1 when smaller, 0 when equal.
int traversal_sign(double v_start, double v_end);

/// Closed-form unsigned isentropic length
///   2 sqrt(cp/R) |f1(v1)^(1/2) - f1(v2)^(1/2)| exp((s - s0)/(2 cv)).
/// Throws UnsupportedModel unless the model is Ideal or QuasiIdeal.
double isentropic_length_closed(const GasModel& model, double s, double v1, double v2);

/// Closed-form length carrying the traversal sign: negative for a compression.
double isentropic_length_signed(const GasModel& model, double s, double v_start, double v_end);

/// Quadrature of sqrt((d^2u/dv^2)_s) between v1 and v2 (unsigned). Works for
/// every variant; throws InstabilityError where the integrand goes negative.
LengthResult isentropic_length_numeric(const GasModel& model, double s, double v1, double v2,
                                       const QuadratureConfig& cfg = {});

/// Quadrature of sqrt(cp p / (cv v)) between v1 and v2, the ideal-gas form
/// of the isentropic length (kappa_T = 1/p). Ideal models only.
LengthResult isentropic_length_pressure_form(const GasModel& model, double s, double v1, double v2,
                                             const QuadratureConfig& cfg = {});

/// Flow-velocity change of a one-mole isentropic rarefaction from (p0, V0) to p1:
///   2/(gamma-1) sqrt(gamma p0 V0) [1 - (p1/p0)^((gamma-1)/(2 gamma))].
double rarefaction_length(double gamma, double p0, double V0, double p1);

/// Segment that is both isothermal at T and isentropic at s between v1 and v2.
/// For Ideal and QuasiIdeal gases f1 is strictly monotone, so this only exists
/// for v1 == v2; any other request throws DomainError. Other variants are
/// accepted when both endpoints really sit at temperature T.
Segment isothermal_isentrope(const GasModel& model, double s, double T, double v1, double v2);

}  // namespace thermolength
