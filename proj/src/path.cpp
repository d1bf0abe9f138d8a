// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermolength/path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermolength/errors.hpp"
#include "thermolength/metric.hpp"

namespace thermolength {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool close(double x, double y) {
  return std::abs(x - y) < Path::kJoinTolerance * std::max({1.0, std::abs(x), std::abs(y)});
}

void require_ideal_like(const GasModel& model, const char* what) {
  if (!model.is_ideal_like()) {
    std::ostringstream os;
    os << what << " has no closed form for the " << to_string(model.variant())
       << " model; integrate numerically instead";
    throw UnsupportedModel(os.str());
  }
}

// Integrand of a length: sqrt of a quadratic form that must be non-negative.
// Values within roundoff of zero are clamped.
double checked_sqrt(double q, double scale, const State& at) {
  if (q >= 0.0) return std::sqrt(q);
  if (q > -1e-13 * scale) return 0.0;
  std::ostringstream os;
  os << "metric is not positive definite at (s=" << at.s << ", v=" << at.v
     << "): squared line element " << q;
  throw InstabilityError(os.str());
}

}  // namespace

SegmentPoint evaluate(const GasModel& model, const Segment& segment, double xi) {
  return std::visit(
      overloaded{
          [&](const Isentrope& seg) {
            const double dv = seg.v_end - seg.v_start;
            return SegmentPoint{{seg.s, seg.v_start + xi * dv}, 0.0, dv};
          },
          [&](const Isochore& seg) {
            const double ds = seg.s_end - seg.s_start;
            return SegmentPoint{{seg.s_start + xi * ds, seg.v}, ds, 0.0};
          },
          [&](const Isotherm& seg) {
            const double dv = seg.v_end - seg.v_start;
            const double v = seg.v_start + xi * dv;
            const double s = entropy_on_isotherm(model, seg.T, v);
            const double ds_dv = -model.cv() * model.f1_prime(v) / model.f1(v);
            return SegmentPoint{{s, v}, ds_dv * dv, dv};
          },
          [&](const LinearSV& seg) {
            const double ds = seg.end.s - seg.start.s;
            const double dv = seg.end.v - seg.start.v;
            return SegmentPoint{{seg.start.s + xi * ds, seg.start.v + xi * dv}, ds, dv};
          },
      },
      segment);
}

State segment_start(const GasModel& model, const Segment& segment) {
  return evaluate(model, segment, 0.0).state;
}

State segment_end(const GasModel& model, const Segment& segment) {
  // Evaluate the endpoint exactly instead of through xi = 1 arithmetic.
  return std::visit(overloaded{
                        [](const Isentrope& seg) { return State{seg.s, seg.v_end}; },
                        [](const Isochore& seg) { return State{seg.s_end, seg.v}; },
                        [&](const Isotherm& seg) {
                          return State{entropy_on_isotherm(model, seg.T, seg.v_end), seg.v_end};
                        },
                        [](const LinearSV& seg) { return seg.end; },
                    },
                    segment);
}

Segment reversed(const Segment& segment) {
  return std::visit(overloaded{
                        [](const Isentrope& seg) -> Segment {
                          return Isentrope{seg.s, seg.v_end, seg.v_start};
                        },
                        [](const Isochore& seg) -> Segment {
                          return Isochore{seg.v, seg.s_end, seg.s_start};
                        },
                        [](const Isotherm& seg) -> Segment {
                          return Isotherm{seg.T, seg.v_end, seg.v_start};
                        },
                        [](const LinearSV& seg) -> Segment { return LinearSV{seg.end, seg.start}; },
                    },
                    segment);
}

std::string_view kind_name(const Segment& segment) {
  return std::visit(overloaded{
                        [](const Isentrope&) { return std::string_view{"isentrope"}; },
                        [](const Isochore&) { return std::string_view{"isochore"}; },
                        [](const Isotherm&) { return std::string_view{"isotherm"}; },
                        [](const LinearSV&) { return std::string_view{"linear"}; },
                    },
                    segment);
}

Path Path::reversed() const {
  std::vector<Segment> out;
  out.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    out.push_back(thermolength::reversed(*it));
  }
  return Path(std::move(out));
}

void Path::validate(const GasModel& model) const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const State start = segment_start(model, segments_[i]);
    const State end = segment_end(model, segments_[i]);
    model.check_state(start);
    model.check_state(end);
    if (i + 1 < segments_.size()) {
      const State next = segment_start(model, segments_[i + 1]);
      if (!close(end.s, next.s) || !close(end.v, next.v)) {
        std::ostringstream os;
        os.precision(17);
        os << "segment " << i << " ends at (s=" << end.s << ", v=" << end.v << ") but segment "
           << i + 1 << " starts at (s=" << next.s << ", v=" << next.v << ")";
        throw DomainError(os.str());
      }
    }
  }
}

LengthResult path_length(const GasModel& model, const Path& path, const QuadratureConfig& cfg) {
  cfg.validate();
  path.validate(model);
  LengthResult total;
  for (const Segment& segment : path.segments()) {
    auto integrand = [&](double xi) {
      const SegmentPoint pt = evaluate(model, segment, xi);
      const MetricTensor m = metric_from_hessian(model, pt.state);
      if (!m.stable) {
        std::ostringstream os;
        os << "path crosses a thermodynamically unstable state (s=" << pt.state.s
           << ", v=" << pt.state.v << ")";
        throw InstabilityError(os.str());
      }
      const double q = line_element(m, pt.ds, pt.dv).value;
      const double scale = std::abs(m.g_ss * pt.ds * pt.ds) +
                           std::abs(2.0 * m.g_sv * pt.ds * pt.dv) +
                           std::abs(m.g_vv * pt.dv * pt.dv);
      return checked_sqrt(q, scale, pt.state);
    };
    const QuadratureResult r = integrate(integrand, 0.0, 1.0, cfg);
    total.value += r.value;
    total.estimated_error += r.estimated_error;
    total.panels_used += r.panels_used;
  }
  return total;
}

int traversal_sign(double v_start, double v_end) {
  return (v_end > v_start) - (v_end < v_start);
}

double isentropic_length_closed(const GasModel& model, double s, double v1, double v2) {
  require_ideal_like(model, "isentropic length");
  model.check_state({s, v1});
  model.check_state({s, v2});
  const double half_exponent = -0.5 * model.R() / model.cv();
  const double b = model.b();
  const double bracket = std::pow(v1 - b, half_exponent) - std::pow(v2 - b, half_exponent);
  const double cp = model.cv() + model.R();
  return 2.0 * std::sqrt(cp / model.R()) * std::abs(bracket) *
         std::exp((s - model.s0()) / (2.0 * model.cv()));
}

double isentropic_length_signed(const GasModel& model, double s, double v_start, double v_end) {
  return traversal_sign(v_start, v_end) * isentropic_length_closed(model, s, v_start, v_end);
}

LengthResult isentropic_length_numeric(const GasModel& model, double s, double v1, double v2,
                                       const QuadratureConfig& cfg) {
  model.check_state({s, v1});
  model.check_state({s, v2});
  const double e = model.entropy_factor(s);
  auto integrand = [&](double v) {
    const double curvature_term = model.f1_second(v) * e;
    const double attraction_term = model.cv() * model.f2_second(v);
    return checked_sqrt(curvature_term - attraction_term,
                        std::abs(curvature_term) + std::abs(attraction_term), {s, v});
  };
  const QuadratureResult r = integrate(integrand, std::min(v1, v2), std::max(v1, v2), cfg);
  return {r.value, r.estimated_error, r.panels_used};
}

LengthResult isentropic_length_pressure_form(const GasModel& model, double s, double v1, double v2,
                                             const QuadratureConfig& cfg) {
  if (model.variant() != Variant::kIdeal) {
    throw UnsupportedModel("pressure form of the isentropic length assumes kappa_T = 1/p");
  }
  model.check_state({s, v1});
  model.check_state({s, v2});
  const double ratio = (model.cv() + model.R()) / model.cv();
  auto integrand = [&](double v) { return std::sqrt(ratio * pressure(model, {s, v}) / v); };
  const QuadratureResult r = integrate(integrand, std::min(v1, v2), std::max(v1, v2), cfg);
  return {r.value, r.estimated_error, r.panels_used};
}

double rarefaction_length(double gamma, double p0, double V0, double p1) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw DomainError("rarefaction length needs gamma > 1");
  }
  if (!(p0 > 0.0) || !(V0 > 0.0) || !(p1 > 0.0) || !std::isfinite(p0) || !std::isfinite(V0) ||
      !std::isfinite(p1)) {
    throw DomainError("rarefaction length needs positive finite p0, V0 and p1");
  }
  const double exponent = (gamma - 1.0) / (2.0 * gamma);
  return 2.0 / (gamma - 1.0) * std::sqrt(gamma * p0 * V0) * (1.0 - std::pow(p1 / p0, exponent));
}

Segment isothermal_isentrope(const GasModel& model, double s, double T, double v1, double v2) {
  model.check_state({s, v1});
  model.check_state({s, v2});
  if (model.is_ideal_like() && v1 != v2) {
    throw DomainError(
        "an ideal or quasi-ideal isentrope is isothermal only for a zero volume change: "
        "f1 is strictly monotone in v");
  }
  for (double v : {v1, v2}) {
    const double t = temperature(model, {s, v});
    if (std::abs(t - T) > 1e-12 * std::max(1.0, std::abs(T))) {
      std::ostringstream os;
      os << "state (s=" << s << ", v=" << v << ") has temperature " << t << ", not " << T;
      throw DomainError(os.str());
    }
  }
  return Isentrope{s, v1, v2};
}

}  // namespace thermolength
