// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermolength/eos.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "thermolength/errors.hpp"

namespace thermolength {

namespace {

void require_positive(double x, const char* name) {
  if (!std::isfinite(x) || x <= 0.0) {
    std::ostringstream os;
    os << name << " must be positive and finite, got " << x;
    throw DomainError(os.str());
  }
}

void require_nonnegative(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    std::ostringstream os;
    os << name << " must be non-negative and finite, got " << x;
    throw DomainError(os.str());
  }
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    std::ostringstream os;
    os << name << " must be finite, got " << x;
    throw DomainError(os.str());
  }
}

bool complete(const VolumeFunction& f) { return f.value && f.first && f.second; }

}  // namespace

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::kIdeal:
      return "ideal";
    case Variant::kQuasiIdeal:
      return "quasi-ideal";
    case Variant::kVanDerWaals:
      return "vdw";
    case Variant::kCustom:
      return "custom";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  if (name == "ideal") return Variant::kIdeal;
  if (name == "quasi-ideal" || name == "quasi_ideal" || name == "quasiideal") {
    return Variant::kQuasiIdeal;
  }
  if (name == "vdw" || name == "van-der-waals" || name == "vanderwaals") {
    return Variant::kVanDerWaals;
  }
  if (name == "custom") return Variant::kCustom;
  throw DomainError("unknown model variant '" + std::string(name) + "'");
}

GasModel GasModel::ideal(double cv, double R, double s0) {
  require_positive(cv, "cv");
  require_positive(R, "R");
  require_finite(s0, "s0");
  GasModel m;
  m.variant_ = Variant::kIdeal;
  m.cv_ = cv;
  m.R_ = R;
  m.s0_ = s0;
  return m;
}

GasModel GasModel::quasi_ideal(double cv, double R, double b, double s0) {
  GasModel m = ideal(cv, R, s0);
  require_nonnegative(b, "b");
  m.variant_ = Variant::kQuasiIdeal;
  m.b_ = b;
  m.v_lower_ = b;
  return m;
}

GasModel GasModel::van_der_waals(double cv, double R, double a, double b, double s0) {
  GasModel m = quasi_ideal(cv, R, b, s0);
  require_nonnegative(a, "a");
  m.variant_ = Variant::kVanDerWaals;
  m.a_ = a;
  return m;
}

GasModel GasModel::custom(double cv, double R, VolumeFunction f1, VolumeFunction f2, double s0,
                          double v_lower) {
  GasModel m = ideal(cv, R, s0);
  require_nonnegative(v_lower, "v_lower");
  if (!complete(f1) || !complete(f2)) {
    throw DomainError("custom model needs f1, f2 and both of their derivatives");
  }
  m.variant_ = Variant::kCustom;
  m.v_lower_ = v_lower;
  m.custom_f1_ = std::move(f1);
  m.custom_f2_ = std::move(f2);
  return m;
}

double GasModel::lower_volume() const { return v_lower_; }

double GasModel::f1(double v) const {
  if (variant_ == Variant::kCustom) return custom_f1_.value(v);
  return std::pow(v - b_, -R_ / cv_);
}

double GasModel::f1_prime(double v) const {
  if (variant_ == Variant::kCustom) return custom_f1_.first(v);
  const double n = R_ / cv_;
  return -n * std::pow(v - b_, -n - 1.0);
}

double GasModel::f1_second(double v) const {
  if (variant_ == Variant::kCustom) return custom_f1_.second(v);
  const double n = R_ / cv_;
  return n * (n + 1.0) * std::pow(v - b_, -n - 2.0);
}

double GasModel::f2(double v) const {
  switch (variant_) {
    case Variant::kVanDerWaals:
      return a_ / (cv_ * v);
    case Variant::kCustom:
      return custom_f2_.value(v);
    default:
      return 0.0;
  }
}

double GasModel::f2_prime(double v) const {
  switch (variant_) {
    case Variant::kVanDerWaals:
      return -a_ / (cv_ * v * v);
    case Variant::kCustom:
      return custom_f2_.first(v);
    default:
      return 0.0;
  }
}

double GasModel::f2_second(double v) const {
  switch (variant_) {
    case Variant::kVanDerWaals:
      return 2.0 * a_ / (cv_ * v * v * v);
    case Variant::kCustom:
      return custom_f2_.second(v);
    default:
      return 0.0;
  }
}

double GasModel::entropy_factor(double s) const { return std::exp((s - s0_) / cv_); }

void GasModel::check_volume(double v) const {
  if (!std::isfinite(v) || v - v_lower_ <= kDomainMargin) {
    std::ostringstream os;
    os << "molar volume " << v << " outside the valid domain v > " << v_lower_ << " for the "
       << to_string(variant_) << " model";
    throw DomainError(os.str());
  }
  if (variant_ == Variant::kCustom) {
    const double f = custom_f1_.value(v);
    if (!std::isfinite(f) || f <= 0.0) {
      std::ostringstream os;
      os << "custom f1(" << v << ") = " << f << " is not positive";
      throw DomainError(os.str());
    }
  }
}

void GasModel::check_state(const State& state) const {
  require_finite(state.s, "s");
  check_volume(state.v);
}

double internal_energy(const GasModel& model, const State& state) {
  model.check_state(state);
  return model.f1(state.v) * model.entropy_factor(state.s) - model.cv() * model.f2(state.v);
}

double temperature(const GasModel& model, const State& state) {
  model.check_state(state);
  return model.f1(state.v) / model.cv() * model.entropy_factor(state.s);
}

double pressure(const GasModel& model, const State& state) {
  model.check_state(state);
  return -(model.f1_prime(state.v) * model.entropy_factor(state.s) -
           model.cv() * model.f2_prime(state.v));
}

ThermoPoint thermo_point(const GasModel& model, const State& state) {
  ThermoPoint tp;
  tp.u = internal_energy(model, state);
  tp.T = temperature(model, state);
  tp.p = pressure(model, state);
  tp.cv = model.cv();
  const double v = state.v;

  switch (model.variant()) {
    case Variant::kIdeal:
    case Variant::kQuasiIdeal: {
      // p (v - b) = R T
      const double free_volume = v - model.b();
      tp.cp = model.cv() + model.R();
      tp.alpha = free_volume / (v * tp.T);
      tp.kappa_t = free_volume / (v * tp.p);
      return tp;
    }
    case Variant::kVanDerWaals: {
      // p = R T / (v - b) - a / v^2
      const double free_volume = v - model.b();
      const double dp_dT = model.R() / free_volume;
      const double dp_dv =
          -model.R() * tp.T / (free_volume * free_volume) + 2.0 * model.a() / (v * v * v);
      if (dp_dv == 0.0) {
        throw SingularityError("(dp/dv)_T vanishes: state lies on the spinodal");
      }
      tp.kappa_t = -1.0 / (v * dp_dv);
      tp.alpha = tp.kappa_t * dp_dT;
      break;
    }
    case Variant::kCustom: {
      const double e = model.entropy_factor(state.s);
      const double u_ss = model.f1(v) * e / (model.cv() * model.cv());
      const double u_sv = model.f1_prime(v) * e / model.cv();
      const double u_vv = model.f1_second(v) * e - model.cv() * model.f2_second(v);
      const double det = u_ss * u_vv - u_sv * u_sv;
      if (det == 0.0) {
        throw SingularityError("(dp/dv)_T vanishes: Hessian of u is singular");
      }
      tp.kappa_t = u_ss / (v * det);
      tp.alpha = -u_sv / (v * det);
      break;
    }
  }
  tp.cp = tp.cv + tp.T * v * tp.alpha * tp.alpha / tp.kappa_t;
  return tp;
}

double entropy_from_uv(const GasModel& model, double u, double v) {
  model.check_volume(v);
  require_finite(u, "u");
  const double ratio = (u + model.cv() * model.f2(v)) / model.f1(v);
  if (!(ratio > 0.0)) {
    std::ostringstream os;
    os << "u = " << u << " is below the zero-temperature energy at v = " << v;
    throw DomainError(os.str());
  }
  return model.s0() + model.cv() * std::log(ratio);
}

double entropy_on_isotherm(const GasModel& model, double T, double v) {
  require_positive(T, "T");
  model.check_volume(v);
  return model.s0() + model.cv() * std::log(model.cv() * T / model.f1(v));
}

}  // namespace thermolength
