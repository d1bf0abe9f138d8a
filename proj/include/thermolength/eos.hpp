// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace thermolength {

enum class Variant { kIdeal, kQuasiIdeal, kVanDerWaals, kCustom };

std::string_view to_string(Variant variant);

/// Parses "ideal", "quasi-ideal", "vdw"/"van-der-waals" or "custom".
/// Throws DomainError on anything else.
Variant parse_variant(std::string_view name);

/// A scalar function of molar volume together with its first and second
/// derivatives. Used to describe the volume factors of a custom model.
struct VolumeFunction {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
};

/// Point in molar entropy / molar volume space.
struct State {
  double s = 0.0;
  double v = 1.0;
};

/**
 * Constant heat capacity constitutive model
 *
 *   u(s, v) = f1(v) exp((s - s0) / cv) - cv f2(v)
 *
 * with the reference energy and volume normalized to one. The named variants
 * fix f1 and f2:
 *
 *   Ideal        f1 = v^(-R/cv)        f2 = 0
 *   QuasiIdeal   f1 = (v-b)^(-R/cv)    f2 = 0
 *   VanDerWaals  f1 = (v-b)^(-R/cv)    f2 = a / (cv v)
 *
 * Custom models take caller-supplied f1, f2 and their analytic derivatives.
 * Instances are immutable.
 */
class GasModel {
 public:
  static GasModel ideal(double cv, double R, double s0 = 0.0);
  static GasModel quasi_ideal(double cv, double R, double b, double s0 = 0.0);
  static GasModel van_der_waals(double cv, double R, double a, double b, double s0 = 0.0);
  /// `v_lower` is the lower edge of the valid volume domain (states need v > v_lower).
  static GasModel custom(double cv, double R, VolumeFunction f1, VolumeFunction f2,
                         double s0 = 0.0, double v_lower = 0.0);

  Variant variant() const { return variant_; }
  double cv() const { return cv_; }
  double R() const { return R_; }
  double s0() const { return s0_; }
  double a() const { return a_; }
  double b() const { return b_; }

  /// States must satisfy v > lower_volume() + domain_margin.
  double lower_volume() const;

  /// True when cp = cv + R holds identically (Ideal and QuasiIdeal).
  bool is_ideal_like() const {
    return variant_ == Variant::kIdeal || variant_ == Variant::kQuasiIdeal;
  }

  double f1(double v) const;
  double f1_prime(double v) const;
  double f1_second(double v) const;
  double f2(double v) const;
  double f2_prime(double v) const;
  double f2_second(double v) const;

  /// exp((s - s0) / cv)
  double entropy_factor(double s) const;

  /// Throws DomainError unless the state lies in the valid domain.
  void check_state(const State& state) const;
  void check_volume(double v) const;

  static constexpr double kDomainMargin = 1e-12;

 private:
  GasModel() = default;

  Variant variant_ = Variant::kIdeal;
  double cv_ = 1.5;
  double R_ = 1.0;
  double s0_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double v_lower_ = 0.0;
  VolumeFunction custom_f1_;
  VolumeFunction custom_f2_;
};

/// Derived scalar fields at a state.
struct ThermoPoint {
  double u = 0.0;
  double T = 0.0;
  double p = 0.0;
  double cv = 0.0;
  double cp = 0.0;
  double alpha = 0.0;    // thermal expansion coefficient
  double kappa_t = 0.0;  // isothermal compressibility

  double gamma() const { return cp / cv; }
};

double internal_energy(const GasModel& model, const State& state);
double temperature(const GasModel& model, const State& state);
double pressure(const GasModel& model, const State& state);

/// Bundles u, T, p with the response coefficients. Ideal and QuasiIdeal use
/// their gas-law closed forms, VanDerWaals differentiates p(T, v) analytically,
/// Custom models go through the Hessian of u.
/// Throws SingularityError where (dp/dv)_T vanishes.
ThermoPoint thermo_point(const GasModel& model, const State& state);

/// Inverse of internal_energy in s at fixed v.
double entropy_from_uv(const GasModel& model, double u, double v);

/// Entropy of the state at volume v with temperature T (exact inverse of
/// temperature() in s).
double entropy_on_isotherm(const GasModel& model, double T, double v);

}  // namespace thermolength
