// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "thermolength/errors.hpp"
#include "thermolength/eos.hpp"
#include "thermolength/finite_difference.hpp"
#include "thermolength/verify.hpp"

using namespace thermolength;
using doctest::Approx;

namespace {

const GasModel kIdeal = GasModel::ideal(1.5, 1.0);
const GasModel kVdw = GasModel::van_der_waals(1.5, 1.0, 0.5, 0.1);

// Reference values from 30-digit mpmath evaluation of u = (v-b)^(-2/3) e^(s/1.5) - a/v
// and its derivatives.
constexpr double kVdwU = 0.57276598289514418;
constexpr double kVdwT = 0.71517732193009612;
constexpr double kVdwP = 0.29464146881121791;

GasModel custom_model() {
  // f1 = v^(-2/3) + 0.25, f2 = 0.1 ln v
  const double n = 2.0 / 3.0;
  VolumeFunction f1{[n](double v) { return std::pow(v, -n) + 0.25; },
                    [n](double v) { return -n * std::pow(v, -n - 1); },
                    [n](double v) { return n * (n + 1) * std::pow(v, -n - 2); }};
  VolumeFunction f2{[](double v) { return 0.1 * std::log(v); }, [](double v) { return 0.1 / v; },
                    [](double v) { return -0.1 / (v * v); }};
  return GasModel::custom(1.5, 1.0, f1, f2);
}

}  // namespace

TEST_CASE("internal energy examples") {
  CHECK(internal_energy(kIdeal, {0.0, 1.0}) == Approx(1.0).epsilon(1e-15));
  // Entropy relation s = s0 + cv ln u + R ln v solved for u at (0, 2).
  const double from_entropy = std::exp((0.0 - 1.0 * std::log(2.0)) / 1.5);
  CHECK(internal_energy(kIdeal, {0.0, 2.0}) == Approx(from_entropy).epsilon(1e-15));
  CHECK(internal_energy(kIdeal, {0.0, 2.0}) == Approx(0.62996052494743658).epsilon(1e-15));
  CHECK(internal_energy(kVdw, {0.0, 1.0}) == Approx(kVdwU).epsilon(1e-14));
}

TEST_CASE("temperature examples") {
  CHECK(temperature(kIdeal, {0.0, 1.0}) == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(temperature(kVdw, {0.0, 1.0}) == Approx(kVdwT).epsilon(1e-14));
  CHECK(temperature(kVdw, {0.0, 1.0}) == Approx((kVdwU + 0.5) / 1.5).epsilon(1e-14));
  for (const GasModel* m : {&kIdeal, &kVdw}) {
    const double t0 = temperature(*m, {0.3, 1.7});
    const double t1 = temperature(*m, {0.3 + 1.5 * std::log(2.0), 1.7});
    CHECK(t1 == Approx(2.0 * t0).epsilon(1e-14));
  }
  const double t_fd = oracle::d1([](double s) { return internal_energy(kVdw, {s, 1.0}); }, 0.0);
  CHECK(t_fd == Approx(kVdwT).epsilon(1e-9));
}

TEST_CASE("pressure examples") {
  CHECK(pressure(kIdeal, {0.0, 1.0}) == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(pressure(kVdw, {0.0, 1.0}) == Approx(kVdwP).epsilon(1e-13));
  CHECK(pressure(kVdw, {0.0, 1.0}) ==
        Approx(2.0 / 3.0 * std::pow(0.9, -5.0 / 3.0) - 0.5).epsilon(1e-14));
  const double p_fd = -oracle::d1([](double v) { return internal_energy(kVdw, {0.0, v}); }, 1.0);
  CHECK(p_fd == Approx(kVdwP).epsilon(1e-9));

  Sampler rng(7);
  for (int i = 0; i < 200; ++i) {
    const State st{rng.uniform(-2, 2), rng.uniform(0.1, 10)};
    const double pv = pressure(kIdeal, st) * st.v;
    CHECK(pv == Approx(kIdeal.R() * temperature(kIdeal, st)).epsilon(1e-13));
  }
}

TEST_CASE("thermo point for the ideal gas") {
  const ThermoPoint tp = thermo_point(kIdeal, {0.0, 1.0});
  CHECK(tp.u == Approx(1.0));
  CHECK(tp.T == Approx(2.0 / 3.0));
  CHECK(tp.p == Approx(2.0 / 3.0));
  CHECK(tp.cv == 1.5);
  CHECK(tp.cp == 2.5);
  CHECK(tp.alpha == Approx(1.5).epsilon(1e-15));
  CHECK(tp.kappa_t == Approx(1.5).epsilon(1e-15));
  CHECK(tp.gamma() == Approx(5.0 / 3.0));

  Sampler rng(11);
  for (int i = 0; i < 100; ++i) {
    const State st{rng.uniform(-2, 2), rng.uniform(0.1, 10)};
    const ThermoPoint t = thermo_point(kIdeal, st);
    CHECK(t.T * st.v * t.alpha * t.alpha / t.kappa_t == Approx(kIdeal.R()).epsilon(1e-13));
  }
}

TEST_CASE("quasi-ideal coefficients") {
  SUBCASE("b = 0 reproduces the ideal gas exactly") {
    const GasModel q = GasModel::quasi_ideal(1.5, 1.0, 0.0);
    const ThermoPoint a = thermo_point(kIdeal, {0.4, 2.3});
    const ThermoPoint b = thermo_point(q, {0.4, 2.3});
    CHECK(a.u == b.u);
    CHECK(a.T == b.T);
    CHECK(a.p == b.p);
    CHECK(a.cp == b.cp);
    CHECK(a.alpha == b.alpha);
    CHECK(a.kappa_t == b.kappa_t);
  }
  SUBCASE("cp = cv + R agrees with the general Mayer relation") {
    const GasModel q = GasModel::quasi_ideal(2.5, 1.3, 0.4);
    const ThermoPoint tp = thermo_point(q, {0.2, 1.1});
    const double v = 1.1;
    CHECK(tp.cp == Approx(tp.cv + tp.T * v * tp.alpha * tp.alpha / tp.kappa_t).epsilon(1e-13));
    CHECK(tp.p * (v - 0.4) == Approx(1.3 * tp.T).epsilon(1e-14));
  }
}

TEST_CASE("van der Waals coefficients follow p(T, v)") {
  // Stable state: large volume.
  const State st{0.0, 4.0};
  const ThermoPoint tp = thermo_point(kVdw, st);
  auto p_of = [&](double T, double v) { return 1.0 * T / (v - 0.1) - 0.5 / (v * v); };
  CHECK(tp.p == Approx(p_of(tp.T, st.v)).epsilon(1e-13));
  const double dp_dv = oracle::d1([&](double v) { return p_of(tp.T, v); }, st.v);
  const double dp_dT = oracle::d1([&](double T) { return p_of(T, st.v); }, tp.T);
  CHECK(tp.kappa_t == Approx(-1.0 / (st.v * dp_dv)).epsilon(1e-9));
  CHECK(tp.alpha == Approx(tp.kappa_t * dp_dT).epsilon(1e-9));
  CHECK(tp.kappa_t > 0.0);
  CHECK(tp.cp > tp.cv);

  SUBCASE("the canonical VdW example state sits inside the spinodal") {
    const ThermoPoint bad = thermo_point(kVdw, {0.0, 1.0});
    CHECK(bad.kappa_t < 0.0);
    CHECK(bad.kappa_t == Approx(-8.5422603167025385).epsilon(1e-12));
  }
}

TEST_CASE("custom model coefficients come from the Hessian") {
  const GasModel m = custom_model();
  const State st{0.3, 1.7};
  const ThermoPoint tp = thermo_point(m, st);
  // p(T, v) for this family: T fixes e^(s/cv) = cv T / f1(v).
  auto p_of = [&](double T, double v) {
    const double n = 2.0 / 3.0;
    const double f1 = std::pow(v, -n) + 0.25;
    const double f1p = -n * std::pow(v, -n - 1);
    return -(f1p * 1.5 * T / f1 - 1.5 * 0.1 / v);
  };
  CHECK(tp.p == Approx(p_of(tp.T, st.v)).epsilon(1e-13));
  const double dp_dv = oracle::d1([&](double v) { return p_of(tp.T, v); }, st.v);
  const double dp_dT = oracle::d1([&](double T) { return p_of(T, st.v); }, tp.T);
  CHECK(tp.kappa_t == Approx(-1.0 / (st.v * dp_dv)).epsilon(1e-9));
  CHECK(tp.alpha == Approx(tp.kappa_t * dp_dT).epsilon(1e-9));
}

TEST_CASE("entropy inversion") {
  CHECK(entropy_from_uv(kIdeal, 1.0, 1.0) == Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(entropy_from_uv(kVdw, kVdwU, 1.0)) < 1e-14);

  Sampler rng(3);
  const GasModel models[] = {kIdeal, GasModel::quasi_ideal(2.0, 1.0, 0.05, 0.3), kVdw,
                             custom_model()};
  for (const GasModel& m : models) {
    for (int i = 0; i < 50; ++i) {
      const State st{rng.uniform(-2, 2), rng.uniform(0.2, 10)};
      const double u = internal_energy(m, st);
      CHECK(entropy_from_uv(m, u, st.v) == Approx(st.s).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(entropy_from_uv(kVdw, -0.6, 1.0), DomainError);
  CHECK_THROWS_AS(entropy_from_uv(kIdeal, 0.0, 1.0), DomainError);
}

TEST_CASE("isotherm entropy inverts temperature") {
  const GasModel models[] = {kIdeal, kVdw, custom_model()};
  for (const GasModel& m : models) {
    const double s = entropy_on_isotherm(m, 0.8, 2.5);
    CHECK(temperature(m, {s, 2.5}) == Approx(0.8).epsilon(1e-14));
  }
  CHECK_THROWS_AS(entropy_on_isotherm(kIdeal, 0.0, 1.0), DomainError);
}

TEST_CASE("domain and parameter validation") {
  CHECK_THROWS_AS(internal_energy(kIdeal, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(internal_energy(kIdeal, {0.0, -1.0}), DomainError);
  CHECK_THROWS_AS(internal_energy(kIdeal, {0.0, 5e-13}), DomainError);
  CHECK_NOTHROW(internal_energy(kIdeal, {0.0, 1e-6}));
  CHECK_THROWS_AS(pressure(kVdw, {0.0, 0.1}), DomainError);
  CHECK_THROWS_AS(temperature(kVdw, {0.0, 0.1 + 1e-13}), DomainError);
  CHECK_THROWS_AS(thermo_point(kVdw, {0.0, 0.05}), DomainError);
  CHECK_THROWS_AS(internal_energy(kIdeal, {NAN, 1.0}), DomainError);

  CHECK_THROWS_AS(GasModel::ideal(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(GasModel::ideal(1.5, 0.0), DomainError);
  CHECK_THROWS_AS(GasModel::quasi_ideal(1.5, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(GasModel::van_der_waals(1.5, 1.0, -0.5, 0.1), DomainError);
  CHECK_THROWS_AS(GasModel::custom(1.5, 1.0, {}, {}), DomainError);

  VolumeFunction negative{[](double) { return -1.0; }, [](double) { return 0.0; },
                          [](double) { return 0.0; }};
  VolumeFunction zero{[](double) { return 0.0; }, [](double) { return 0.0; },
                      [](double) { return 0.0; }};
  const GasModel bad = GasModel::custom(1.5, 1.0, negative, zero);
  CHECK_THROWS_AS(internal_energy(bad, {0.0, 1.0}), DomainError);
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::kIdeal, Variant::kQuasiIdeal, Variant::kVanDerWaals, Variant::kCustom}) {
    CHECK(parse_variant(to_string(v)) == v);
  }
  CHECK(parse_variant("van-der-waals") == Variant::kVanDerWaals);
  CHECK_THROWS_AS(parse_variant("redlich-kwong"), DomainError);
}

TEST_CASE("property: constant heat capacity ODE u_ss - u_s/cv = 0") {
  Sampler rng(2024);
  for (Variant variant : {Variant::kIdeal, Variant::kQuasiIdeal, Variant::kVanDerWaals, Variant::kCustom}) {
    for (int i = 0; i < 50; ++i) {
      const IsentropeInstance inst = random_any(rng, variant);
      auto u_of_s = [&](double s) { return internal_energy(inst.model, {s, inst.v1}); };
      const double h = 1e-3 * inst.model.cv();
      const double u_s = oracle::d1(u_of_s, inst.s, h);
      const double u_ss = oracle::d2(u_of_s, inst.s, h);
      CHECK(std::abs(u_ss - u_s / inst.model.cv()) <= 1e-6 * std::abs(u_s / inst.model.cv()));
    }
  }
}

TEST_CASE("property: degeneracy chain VdW(a=0) == QuasiIdeal(b) == Ideal(b=0)") {
  Sampler rng(99);
  for (int i = 0; i < 100; ++i) {
    const double cv = rng.uniform(1, 5);
    const double b = rng.uniform(0, 0.5);
    const State st{rng.uniform(-2, 2), rng.uniform(b + 0.1, 10)};
    const GasModel vdw = GasModel::van_der_waals(cv, 1.0, 0.0, b);
    const GasModel quasi = GasModel::quasi_ideal(cv, 1.0, b);
    CHECK(internal_energy(vdw, st) == internal_energy(quasi, st));
    CHECK(temperature(vdw, st) == temperature(quasi, st));
    CHECK(pressure(vdw, st) == pressure(quasi, st));

    const GasModel quasi0 = GasModel::quasi_ideal(cv, 1.0, 0.0);
    const GasModel vdw0 = GasModel::van_der_waals(cv, 1.0, 0.0, 0.0);
    const GasModel ideal = GasModel::ideal(cv, 1.0);
    CHECK(internal_energy(quasi0, st) == internal_energy(ideal, st));
    CHECK(internal_energy(vdw0, st) == internal_energy(ideal, st));
    CHECK(temperature(vdw0, st) == temperature(ideal, st));
    CHECK(pressure(vdw0, st) == pressure(ideal, st));
  }
}

TEST_CASE("property: analytic T and p match finite differences of u") {
  Sampler rng(5);
  for (Variant variant : {Variant::kIdeal, Variant::kQuasiIdeal, Variant::kVanDerWaals, Variant::kCustom}) {
    for (int i = 0; i < 50; ++i) {
      const IsentropeInstance inst = random_any(rng, variant);
      const GasModel& m = inst.model;
      const State st{inst.s, inst.v1};
      const double T_fd = fd::first_derivative(
          [&](double s) { return internal_energy(m, {s, st.v}); }, st.s, fd::kFirstStep,
          -std::numeric_limits<double>::infinity(), m.cv());
      const double p_fd = -fd::first_derivative(
          [&](double v) { return internal_energy(m, {st.s, v}); }, st.v, fd::kFirstStep,
          m.lower_volume());
      CHECK(oracle::rel(T_fd, temperature(m, st)) <= 1e-6);
      CHECK(oracle::rel(p_fd, pressure(m, st)) <= 1e-6);
    }
  }
}

TEST_CASE("property: positivity of T and ideal-like p") {
  Sampler rng(17);
  for (Variant variant : {Variant::kIdeal, Variant::kQuasiIdeal, Variant::kVanDerWaals, Variant::kCustom}) {
    for (int i = 0; i < 100; ++i) {
      const IsentropeInstance inst = random_any(rng, variant);
      CHECK(temperature(inst.model, {inst.s, inst.v1}) > 0.0);
      if (inst.model.is_ideal_like()) CHECK(pressure(inst.model, {inst.s, inst.v1}) > 0.0);
    }
  }
}
