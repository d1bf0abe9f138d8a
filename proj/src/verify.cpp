// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermolength/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "thermolength/errors.hpp"
#include "thermolength/finite_difference.hpp"
#include "thermolength/metric.hpp"
#include "thermolength/path.hpp"
#include "thermolength/work.hpp"

namespace thermolength {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Accumulates residuals of one identity over many trials. A thrown library
// error counts as a failed trial.
class Check {
 public:
  Check(std::string name, double tolerance) {
    report_.name = std::move(name);
    report_.tolerance = tolerance;
  }

  void run(const std::function<double()>& residual) {
    ++report_.trials;
    try {
      const double r = residual();
      report_.max_residual = std::max(report_.max_residual, std::isnan(r) ? HUGE_VAL : r);
      if (!(r <= report_.tolerance)) ++report_.failures;
    } catch (const Error& e) {
      ++report_.failures;
      if (report_.first_error.empty()) report_.first_error = e.what();
    }
  }

  IdentityReport report() const { return report_; }

 private:
  IdentityReport report_;
};

GasModel with_variant(Variant variant, double cv, double R, double s0, double a, double b,
                      double c, double d) {
  switch (variant) {
    case Variant::kIdeal:
      return GasModel::ideal(cv, R, s0);
    case Variant::kQuasiIdeal:
      return GasModel::quasi_ideal(cv, R, b, s0);
    case Variant::kVanDerWaals:
      return GasModel::van_der_waals(cv, R, a, b, s0);
    case Variant::kCustom: {
      const double n = R / cv;
      VolumeFunction f1{
          [n, c](double v) { return std::pow(v, -n) + c; },
          [n](double v) { return -n * std::pow(v, -n - 1.0); },
          [n](double v) { return n * (n + 1.0) * std::pow(v, -n - 2.0); },
      };
      VolumeFunction f2{
          [d](double v) { return d * std::log(v); },
          [d](double v) { return d / v; },
          [d](double v) { return -d / (v * v); },
      };
      return GasModel::custom(cv, R, std::move(f1), std::move(f2), s0);
    }
  }
  throw DomainError("unknown variant");
}

// Largest a keeping (d^2u/dv^2)_s positive on [v1, v2] with a factor two margin.
double stable_attraction_bound(double cv, double R, double b, double s, double v1, double v2) {
  const double n = R / cv;
  const double e = std::exp(s / cv);
  double bound = HUGE_VAL;
  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples; ++i) {
    const double v = v1 + (v2 - v1) * i / kSamples;
    bound = std::min(bound, n * (n + 1.0) * std::pow(v - b, -n - 2.0) * e * v * v * v / 2.0);
  }
  return 0.5 * bound;
}

struct Draw {
  double s;
  double v1;
  double v2;
};

Draw draw_isentrope(Sampler& rng, double lower) {
  const double lo = std::max(0.1, lower + 0.05);
  const double hi = std::max(10.0, lower + 10.0);
  double v1 = rng.uniform(lo, hi);
  double v2 = rng.uniform(lo, hi);
  if (v2 < v1) std::swap(v1, v2);
  if (v2 - v1 < 1e-6) v2 = v1 + 1e-3;
  return {rng.uniform(-2.0, 2.0), v1, v2};
}

bool stable_on(const GasModel& model, double s, double v1, double v2) {
  constexpr int kSamples = 32;
  const double e = model.entropy_factor(s);
  for (int i = 0; i <= kSamples; ++i) {
    const double v = v1 + (v2 - v1) * i / kSamples;
    if (!(model.f1_second(v) * e - model.cv() * model.f2_second(v) > 0.0)) return false;
    if (!metric_from_hessian(model, {s, v}).stable) return false;
  }
  return true;
}

std::vector<IdentityReport> run_suite(const std::function<std::optional<IsentropeInstance>(int)>& ideal_like,
                                      const std::function<std::optional<IsentropeInstance>(int)>& ideal_only,
                                      const std::function<std::optional<IsentropeInstance>(int)>& any,
                                      int trials) {
  const QuadratureConfig cfg;
  Check route("metric_route_agreement", 1e-10);
  Check det("ideal_determinant_identity", 1e-10);
  Check closed("closed_vs_quadrature", 1e-8);
  Check pform("pressure_form_vs_closed", 1e-8);
  Check rare("rarefaction_equivalence", 1e-10);
  Check theorem("theorem_roundtrip", 1e-10);
  Check quad("theorem_quadratic_residuals", 1e-9);
  Check corollary("corollary_length_from_work", 1e-10);
  Check iff("corollary_zero_iff", 0.0);
  Check reversal("path_reversal", 1e-10);
  Check mono("isentropic_monotonicity", 0.0);
  Check isotherm("isotherm_remark", 1e-12);
  Check lemma("lemma_length_work", 1e-5);
  Check pint("pressure_integral", 1e-10);
  Check ode("constant_cv_ode", 1e-5);
  Check fdtp("temperature_pressure_vs_fd", 1e-6);

  for (int t = 0; t < trials; ++t) {
    if (auto inst = ideal_like(t)) {
      const GasModel& m = inst->model;
      const double s = inst->s;
      const double v1 = inst->v1;
      const double v2 = inst->v2;

      route.run([&] {
        const State st{s, v1};
        const MetricTensor h = metric_from_hessian(m, st);
        const MetricTensor c = metric_from_coefficients(thermo_point(m, st), st.v);
        return std::max({rel_diff(h.g_ss, c.g_ss), rel_diff(h.g_sv, c.g_sv),
                         rel_diff(h.g_vv, c.g_vv)});
      });
      closed.run([&] {
        return rel_diff(isentropic_length_numeric(m, s, v1, v2, cfg).value,
                        isentropic_length_closed(m, s, v1, v2));
      });
      theorem.run([&] {
        const double L = isentropic_length_closed(m, s, v1, v2);
        const WorkResult w = isentropic_work(m, s, v1, v2);
        return rel_diff(work_from_length(m, L, w.u_final).w_in, std::abs(w.w));
      });
      quad.run([&] {
        const double L = isentropic_length_closed(m, s, v1, v2);
        const WorkResult w = isentropic_work(m, s, v1, v2);
        const double scale = 1.0 + std::abs(w.w);
        return std::max(std::abs(theorem_residual_in(m, L, w.u_final, w.w_in())),
                        std::abs(theorem_residual_out(m, L, w.u_final, w.w_out()))) /
               scale;
      });
      corollary.run([&] {
        const WorkResult w = isentropic_work(m, s, v1, v2);
        return rel_diff(length_from_work(m, w.u_initial, w.u_final),
                        isentropic_length_closed(m, s, v1, v2));
      });
      iff.run([&] {
        const double L = isentropic_length_closed(m, s, v1, v2);
        const double W = isentropic_work(m, s, v1, v2).w_in();
        const double L0 = isentropic_length_closed(m, s, v1, v1);
        const double W0 = isentropic_work(m, s, v1, v1).w_in();
        const bool ok = L > 0.0 && W > 0.0 && L0 == 0.0 && W0 == 0.0;
        return ok ? 0.0 : 1.0;
      });
      reversal.run([&] {
        Path path;
        path.append(Isentrope{s, v1, v2}).append(Isochore{v2, s, s + 0.5});
        return rel_diff(path_length(m, path, cfg).value, path_length(m, path.reversed(), cfg).value);
      });
      mono.run([&] {
        const double mid = 0.5 * (v1 + v2);
        const double a = isentropic_length_closed(m, s, v1, mid);
        const double b = isentropic_length_closed(m, s, v1, v2);
        return a < b ? 0.0 : 1.0;
      });
      isotherm.run([&] {
        const double T = temperature(m, {s, v1});
        const IsothermCheck r = isotherm_remark_check(m, T, v1, v2);
        bool rejected = false;
        try {
          isothermal_isentrope(m, s, T, v1, v2);
        } catch (const DomainError&) {
          rejected = true;
        }
        const double u = internal_energy(m, {s, v1});
        return rejected ? std::max(std::abs(r.work) / u, std::abs(r.length) / std::sqrt(u)) : 1.0;
      });
    }

    if (auto inst = ideal_only(t)) {
      const GasModel& m = inst->model;
      const double s = inst->s;
      const double v1 = inst->v1;
      const double v2 = inst->v2;
      det.run([&] {
        const State st{s, v2};
        const double p = pressure(m, st);
        return rel_diff(metric_from_hessian(m, st).determinant(), p * p / (m.cv() * m.R()));
      });
      pform.run([&] {
        return rel_diff(isentropic_length_pressure_form(m, s, v1, v2, cfg).value,
                        isentropic_length_closed(m, s, v1, v2));
      });
      rare.run([&] {
        const ThermoPoint start = thermo_point(m, {s, v1});
        const double p1 = pressure(m, {s, v2});
        return rel_diff(rarefaction_length(start.gamma(), start.p, v1, p1),
                        isentropic_length_closed(m, s, v1, v2));
      });
    }

    if (auto inst = any(t)) {
      const GasModel& m = inst->model;
      const double s = inst->s;
      const double v1 = inst->v1;
      const double v2 = inst->v2;
      const double lower = m.lower_volume();
      lemma.run([&] {
        const LemmaSides sides = lemma_check(m, s, v1, v2);
        return std::abs(sides.lhs - sides.rhs) / std::abs(sides.lhs);
      });
      pint.run([&] {
        const double du = isentropic_work(m, s, v1, v2).w;
        return pressure_integral_check(m, s, v1, v2, cfg) / (1.0 + std::abs(du));
      });
      ode.run([&] {
        const double inf = std::numeric_limits<double>::infinity();
        auto u_of_s = [&](double x) { return internal_energy(m, {x, v1}); };
        const double u_s = fd::first_derivative(u_of_s, s, fd::kFirstStep, -inf, m.cv());
        const double u_ss = fd::second_derivative(u_of_s, s, fd::kSecondStep, -inf, m.cv());
        return std::abs(u_ss - u_s / m.cv()) / std::abs(u_s / m.cv());
      });
      fdtp.run([&] {
        const State st{s, v2};
        const double T_fd =
            fd::first_derivative([&](double x) { return internal_energy(m, {x, st.v}); }, st.s,
                                 fd::kFirstStep, -std::numeric_limits<double>::infinity(), m.cv());
        const double p_fd = -fd::first_derivative([&](double x) { return internal_energy(m, {st.s, x}); },
                                                  st.v, fd::kFirstStep, lower);
        return std::max(rel_diff(T_fd, temperature(m, st)), rel_diff(p_fd, pressure(m, st)));
      });
    }
  }

  std::vector<IdentityReport> out;
  for (const Check* c : {&route, &det, &closed, &pform, &rare, &theorem, &quad, &corollary, &iff,
                         &reversal, &mono, &isotherm, &lemma, &pint, &ode, &fdtp}) {
    IdentityReport r = c->report();
    if (r.trials > 0) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

IsentropeInstance random_ideal_like(Sampler& rng, Variant variant) {
  const double R = rng.uniform(0.5, 10.0);
  const double cv = rng.uniform(1.0, 5.0) * R;
  const double s = rng.uniform(-2.0, 2.0);
  double v1 = rng.uniform(0.1, 10.0);
  double v2 = rng.uniform(0.1, 10.0);
  if (v2 < v1) std::swap(v1, v2);
  if (v2 - v1 < 1e-6) v2 = v1 + 1e-3;
  if (variant == Variant::kIdeal) return {GasModel::ideal(cv, R), s, v1, v2};
  if (variant != Variant::kQuasiIdeal) throw UnsupportedModel("expected ideal or quasi-ideal");
  const double b = rng.uniform(0.0, 0.5 * v1);
  return {GasModel::quasi_ideal(cv, R, b), s, v1, v2};
}

IsentropeInstance random_any(Sampler& rng, Variant variant) {
  if (variant == Variant::kIdeal || variant == Variant::kQuasiIdeal) {
    return random_ideal_like(rng, variant);
  }
  const double R = rng.uniform(0.5, 10.0);
  const double cv = rng.uniform(1.0, 5.0) * R;
  const double s = rng.uniform(-2.0, 2.0);
  double v1 = rng.uniform(0.1, 10.0);
  double v2 = rng.uniform(0.1, 10.0);
  if (v2 < v1) std::swap(v1, v2);
  if (v2 - v1 < 1e-6) v2 = v1 + 1e-3;
  if (variant == Variant::kVanDerWaals) {
    const double b = rng.uniform(0.0, 0.5 * v1);
    const double a = rng.uniform(0.0, 1.0) * stable_attraction_bound(cv, R, b, s, v1, v2);
    return {GasModel::van_der_waals(cv, R, a, b), s, v1, v2};
  }
  const double c = rng.uniform(0.0, 2.0);
  const double d = rng.uniform(0.0, 1.0);
  return {with_variant(Variant::kCustom, cv, R, 0.0, 0.0, 0.0, c, d), s, v1, v2};
}

std::vector<IdentityReport> run_verification(std::uint64_t seed, int trials) {
  if (trials < 1) throw DomainError("verification needs at least one trial");
  Sampler rng(seed);
  constexpr Variant kAll[] = {Variant::kIdeal, Variant::kQuasiIdeal, Variant::kVanDerWaals,
                              Variant::kCustom};
  auto ideal_like = [&](int t) -> std::optional<IsentropeInstance> {
    return random_ideal_like(rng, t % 2 == 0 ? Variant::kIdeal : Variant::kQuasiIdeal);
  };
  auto ideal_only = [&](int) -> std::optional<IsentropeInstance> {
    return random_ideal_like(rng, Variant::kIdeal);
  };
  auto any = [&](int t) -> std::optional<IsentropeInstance> { return random_any(rng, kAll[t % 4]); };
  return run_suite(ideal_like, ideal_only, any, trials);
}

std::vector<IdentityReport> run_verification(const GasModel& model, std::uint64_t seed,
                                             int trials) {
  if (trials < 1) throw DomainError("verification needs at least one trial");
  Sampler rng(seed);
  const double lower = model.lower_volume();
  auto fixed = [&](int) -> std::optional<IsentropeInstance> {
    // Unstable draws (VdW inside the spinodal) are redrawn a bounded number of times.
    for (int attempt = 0; attempt < 100; ++attempt) {
      const Draw d = draw_isentrope(rng, lower);
      if (stable_on(model, d.s, d.v1, d.v2)) return IsentropeInstance{model, d.s, d.v1, d.v2};
    }
    return std::nullopt;
  };
  auto none = [](int) -> std::optional<IsentropeInstance> { return std::nullopt; };
  return run_suite(model.is_ideal_like() ? std::function(fixed) : std::function(none),
                   model.variant() == Variant::kIdeal ? std::function(fixed) : std::function(none),
                   fixed, trials);
}
}  // namespace thermolength
