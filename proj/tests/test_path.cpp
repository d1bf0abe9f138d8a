// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thermolength/errors.hpp"
#include "thermolength/metric.hpp"
#include "thermolength/path.hpp"
#include "thermolength/verify.hpp"

using namespace thermolength;
using doctest::Approx;

namespace {

const GasModel kIdeal = GasModel::ideal(1.5, 1.0);
const GasModel kVdw = GasModel::van_der_waals(1.5, 1.0, 0.5, 0.1);

// 2 sqrt(2.5) (1 - 2^(-1/3)); agrees with 30-digit mpmath quadrature of sqrt(u_vv).
constexpr double kCanonicalLength = 0.65237621798496845;

// Brute-force length of a segment: Simpson on sqrt of the Hessian quadratic form,
// with derivatives of the segment taken by finite differences of its states.
double oracle_length(const GasModel& m, const Segment& seg) {
  auto integrand = [&](double xi) {
    const double h = 1e-4;
    const double lo = std::max(0.0, xi - h);
    const double hi = std::min(1.0, xi + h);
    const State a = evaluate(m, seg, lo).state;
    const State b = evaluate(m, seg, hi).state;
    const State c = evaluate(m, seg, xi).state;
    const double ds = (b.s - a.s) / (hi - lo);
    const double dv = (b.v - a.v) / (hi - lo);
    const MetricTensor g = metric_from_hessian(m, c);
    return std::sqrt(g.g_ss * ds * ds + 2 * g.g_sv * ds * dv + g.g_vv * dv * dv);
  };
  return oracle::simpson(integrand, 0.0, 1.0, 4000);
}

}  // namespace

TEST_CASE("canonical isentrope") {
  const double closed = isentropic_length_closed(kIdeal, 0.0, 1.0, 2.0);
  CHECK(closed == Approx(kCanonicalLength).epsilon(1e-15));
  CHECK(closed == Approx(2.0 * std::sqrt(2.5) * (1.0 - std::pow(2.0, -1.0 / 3.0))).epsilon(1e-15));

  const LengthResult quad = path_length(kIdeal, Path({Isentrope{0.0, 1.0, 2.0}}));
  CHECK(std::abs(quad.value - kCanonicalLength) <= 1e-10 * kCanonicalLength);
  CHECK(quad.estimated_error <= 1e-10 * quad.value);
  CHECK(quad.panels_used >= 1);

  const LengthResult numeric = isentropic_length_numeric(kIdeal, 0.0, 1.0, 2.0);
  CHECK(std::abs(numeric.value - kCanonicalLength) <= 1e-10 * kCanonicalLength);

  const double simpson = oracle::simpson(
      [](double v) { return std::sqrt(10.0 / 9.0 * std::pow(v, -8.0 / 3.0)); }, 1.0, 2.0);
  CHECK(simpson == Approx(kCanonicalLength).epsilon(1e-12));
}

TEST_CASE("zero-length and reversed paths") {
  CHECK(path_length(kIdeal, Path({Isentrope{0.0, 1.5, 1.5}})).value == 0.0);
  CHECK(path_length(kIdeal, Path{}).value == 0.0);
  CHECK(isentropic_length_closed(kIdeal, 0.3, 2.0, 2.0) == 0.0);

  Path path;
  path.append(Isentrope{0.0, 1.0, 2.0})
      .append(Isochore{2.0, 0.0, 0.7})
      .append(LinearSV{{0.7, 2.0}, {-0.2, 3.1}});
  const double forward = path_length(kIdeal, path).value;
  const double backward = path_length(kIdeal, path.reversed()).value;
  CHECK(forward == Approx(backward).epsilon(1e-12));
  CHECK(forward > 0.0);
}

TEST_CASE("segment lengths against brute-force Simpson") {
  // Reference values from 30-digit mpmath quadrature.
  CHECK(path_length(kIdeal, Path({Isochore{1.0, 0.0, 1.0}})).value ==
        Approx(0.79122485017217906).epsilon(1e-12));
  CHECK(path_length(kIdeal, Path({LinearSV{{0.0, 1.0}, {1.0, 2.0}}})).value ==
        Approx(0.63621577808206532).epsilon(1e-12));
  CHECK(path_length(kIdeal, Path({Isotherm{2.0 / 3.0, 1.0, 2.0}})).value ==
        Approx(0.56595230300688851).epsilon(1e-12));

  const GasModel q = GasModel::quasi_ideal(2.0, 1.2, 0.3, 0.1);
  for (const Segment& seg : {Segment{Isotherm{0.9, 0.5, 4.0}}, Segment{Isochore{0.8, -1.0, 1.0}},
                             Segment{LinearSV{{0.2, 0.6}, {-0.5, 3.0}}}}) {
    CHECK(path_length(q, Path({seg})).value == Approx(oracle_length(q, seg)).epsilon(1e-8));
  }
}

TEST_CASE("isotherm segments follow the isotherm") {
  const GasModel q = GasModel::van_der_waals(2.0, 1.0, 0.05, 0.1);
  const Segment seg = Isotherm{1.3, 0.7, 3.0};
  for (double xi : {0.0, 0.25, 0.5, 1.0}) {
    const SegmentPoint pt = evaluate(q, seg, xi);
    CHECK(temperature(q, pt.state) == Approx(1.3).epsilon(1e-13));
    const double h = 1e-6;
    if (xi > 0.0 && xi < 1.0) {
      const double ds_fd =
          (evaluate(q, seg, xi + h).state.s - evaluate(q, seg, xi - h).state.s) / (2 * h);
      CHECK(pt.ds == Approx(ds_fd).epsilon(1e-7));
    }
  }
  CHECK(segment_end(q, seg).v == 3.0);
  CHECK(kind_name(seg) == "isotherm");
}

TEST_CASE("path validation") {
  Path gap;
  gap.append(Isentrope{0.0, 1.0, 2.0}).append(Isochore{2.1, 0.0, 1.0});
  CHECK_THROWS_AS(path_length(kIdeal, gap), DomainError);

  Path entropy_gap;
  entropy_gap.append(Isentrope{0.0, 1.0, 2.0}).append(Isochore{2.0, 1e-9, 1.0});
  CHECK_THROWS_AS(entropy_gap.validate(kIdeal), DomainError);

  Path joined;
  const double T = temperature(kIdeal, {0.0, 2.0});
  joined.append(Isentrope{0.0, 1.0, 2.0}).append(Isotherm{T, 2.0, 3.0});
  CHECK_NOTHROW(joined.validate(kIdeal));

  CHECK_THROWS_AS(path_length(kIdeal, Path({Isentrope{0.0, 1.0, 0.0}})), DomainError);
  const GasModel q = GasModel::quasi_ideal(1.5, 1.0, 0.5);
  CHECK_THROWS_AS(path_length(q, Path({Isentrope{0.0, 0.4, 2.0}})), DomainError);
  CHECK_THROWS_AS(isentropic_length_numeric(q, 0.0, 0.4, 2.0), DomainError);

  QuadratureConfig bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(path_length(kIdeal, Path({Isentrope{0.0, 1.0, 2.0}}), bad), DomainError);
}

TEST_CASE("unstable van der Waals region is refused") {
  CHECK_THROWS_AS(path_length(kVdw, Path({Isentrope{0.0, 1.0, 2.0}})), InstabilityError);
  // Stable at large volume.
  CHECK(path_length(kVdw, Path({Isentrope{0.0, 5.0, 8.0}})).value > 0.0);
  // An isentrope into the region where (d^2u/dv^2)_s < 0.
  const GasModel strong = GasModel::van_der_waals(1.5, 1.0, 5.0, 0.1);
  CHECK(metric_from_hessian(strong, {0.0, 1.0}).g_vv < 0.0);
  CHECK_THROWS_AS(isentropic_length_numeric(strong, 0.0, 0.8, 1.5), InstabilityError);
}

TEST_CASE("closed forms") {
  SUBCASE("quasi-ideal shift by b") {
    const GasModel q = GasModel::quasi_ideal(1.5, 1.0, 0.1);
    CHECK(isentropic_length_closed(q, 0.0, 1.1, 2.1) == Approx(kCanonicalLength).epsilon(1e-14));
  }
  SUBCASE("signed variant") {
    CHECK(isentropic_length_signed(kIdeal, 0.0, 1.0, 2.0) == Approx(kCanonicalLength));
    CHECK(isentropic_length_signed(kIdeal, 0.0, 2.0, 1.0) == Approx(-kCanonicalLength));
    CHECK(isentropic_length_signed(kIdeal, 0.0, 2.0, 2.0) == 0.0);
    CHECK(isentropic_length_closed(kIdeal, 0.0, 2.0, 1.0) == isentropic_length_closed(kIdeal, 0.0, 1.0, 2.0));
    CHECK(traversal_sign(1.0, 2.0) == 1);
    CHECK(traversal_sign(2.0, 1.0) == -1);
    CHECK(traversal_sign(2.0, 2.0) == 0);
  }
  SUBCASE("unsupported models") {
    CHECK_THROWS_AS(isentropic_length_closed(kVdw, 0.0, 5.0, 6.0), UnsupportedModel);
    const GasModel q = GasModel::quasi_ideal(1.5, 1.0, 0.1);
    CHECK_THROWS_AS(isentropic_length_pressure_form(q, 0.0, 1.0, 2.0), UnsupportedModel);
  }
  SUBCASE("pressure form") {
    CHECK(isentropic_length_pressure_form(kIdeal, 0.0, 1.0, 2.0).value ==
          Approx(kCanonicalLength).epsilon(1e-10));
  }
}

TEST_CASE("numeric isentropic length of the van der Waals gas") {
  // Regression constant, confirmed by 30-digit mpmath quadrature.
  const LengthResult r = isentropic_length_numeric(kVdw, 0.0, 1.0, 2.0);
  CHECK(r.value == Approx(0.42209149282654261).epsilon(1e-10));
  const double simpson = oracle::simpson(
      [](double v) {
        return std::sqrt(10.0 / 9.0 * std::pow(v - 0.1, -8.0 / 3.0) - 1.0 / (v * v * v));
      },
      1.0, 2.0);
  CHECK(r.value == Approx(simpson).epsilon(1e-11));

  const double a = isentropic_length_numeric(kVdw, 0.0, 1.0, 1.4).value;
  const double b = isentropic_length_numeric(kVdw, 0.0, 1.4, 2.0).value;
  CHECK(a + b == Approx(r.value).epsilon(1e-12));
}

TEST_CASE("rarefaction formula") {
  CHECK(rarefaction_length(1.4, 2.0, 3.0, 2.0) == 0.0);
  const double p2 = pressure(kIdeal, {0.0, 2.0});
  CHECK(rarefaction_length(5.0 / 3.0, 2.0 / 3.0, 1.0, p2) == Approx(kCanonicalLength).epsilon(1e-14));
  // p1 -> 0 approaches 2/(gamma-1) sqrt(gamma p0 V0).
  const double limit = 2.0 / 0.4 * std::sqrt(1.4 * 2.0 * 3.0);
  CHECK(rarefaction_length(1.4, 2.0, 3.0, 1e-200) == Approx(limit).epsilon(1e-12));

  CHECK_THROWS_AS(rarefaction_length(1.0, 1.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(rarefaction_length(0.5, 1.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(rarefaction_length(1.4, 0.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(rarefaction_length(1.4, 1.0, -1.0, 0.5), DomainError);
  CHECK_THROWS_AS(rarefaction_length(1.4, 1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("isothermal isentropes exist only for zero volume change") {
  const double T = temperature(kIdeal, {0.0, 1.0});
  CHECK_THROWS_AS(isothermal_isentrope(kIdeal, 0.0, T, 1.0, 2.0), DomainError);
  const GasModel q = GasModel::quasi_ideal(1.5, 1.0, 0.2);
  CHECK_THROWS_AS(isothermal_isentrope(q, 0.0, temperature(q, {0.0, 1.0}), 1.0, 1.5), DomainError);
  const Segment trivial = isothermal_isentrope(kIdeal, 0.0, T, 1.0, 1.0);
  CHECK(path_length(kIdeal, Path({trivial})).value == 0.0);
  CHECK_THROWS_AS(isothermal_isentrope(kIdeal, 0.0, 2.0 * T, 1.0, 1.0), DomainError);

  // A custom gas with constant f1 has isothermal isentropes.
  VolumeFunction flat{[](double) { return 1.0; }, [](double) { return 0.0; },
                      [](double) { return 0.0; }};
  VolumeFunction f2{[](double v) { return std::log(v); }, [](double v) { return 1.0 / v; },
                    [](double v) { return -1.0 / (v * v); }};
  const GasModel c = GasModel::custom(1.5, 1.0, flat, f2);
  const double Tc = temperature(c, {0.0, 1.0});
  CHECK_NOTHROW(isothermal_isentrope(c, 0.0, Tc, 1.0, 2.0));
}

TEST_CASE("property: closed form vs quadrature and monotonicity") {
  Sampler rng(12);
  for (int i = 0; i < 200; ++i) {
    const IsentropeInstance inst =
        random_ideal_like(rng, i % 2 ? Variant::kQuasiIdeal : Variant::kIdeal);
    const double closed = isentropic_length_closed(inst.model, inst.s, inst.v1, inst.v2);
    const double numeric = isentropic_length_numeric(inst.model, inst.s, inst.v1, inst.v2).value;
    CHECK(std::abs(numeric - closed) <= 1e-8 * (1.0 + closed));
    const double path =
        path_length(inst.model, Path({Isentrope{inst.s, inst.v1, inst.v2}})).value;
    CHECK(std::abs(path - closed) <= 1e-8 * (1.0 + closed));

    const double mid = 0.5 * (inst.v1 + inst.v2);
    CHECK(isentropic_length_closed(inst.model, inst.s, inst.v1, mid) < closed);
  }
}
