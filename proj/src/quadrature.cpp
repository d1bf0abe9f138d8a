// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermolength/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "thermolength/errors.hpp"

namespace thermolength {

namespace {

// Kronrod abscissae on [0, 1); odd indices are shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double left;
  double right;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double left, double right) {
  const double center = 0.5 * (left + right);
  const double half = 0.5 * (right - left);

  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {left, right, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
    std::ostringstream os;
    os << "invalid quadrature config: rel_tol=" << rel_tol << " abs_tol=" << abs_tol
       << " max_subdivisions=" << max_subdivisions;
    throw DomainError(os.str());
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {0.0, 0.0, 0};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }

  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(cfg.max_subdivisions));
  panels.push_back(evaluate_panel(f, a, b));

  auto totals = [&panels] {
    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  for (;;) {
    if (!std::isfinite(value) || !std::isfinite(error)) {
      std::ostringstream os;
      os << "integrand is not finite on [" << a << ", " << b << "]";
      throw ConvergenceError(os.str());
    }
    if (error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) break;
    if (static_cast<int>(panels.size()) >= cfg.max_subdivisions) {
      std::ostringstream os;
      os << "quadrature on [" << a << ", " << b << "] stalled at error " << error << " after "
         << panels.size() << " panels";
      throw ConvergenceError(os.str());
    }
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& x, const Panel& y) { return x.error < y.error; });
    const Panel parent = *worst;
    const double mid = 0.5 * (parent.left + parent.right);
    if (!(parent.left < mid && mid < parent.right)) {
      throw ConvergenceError("quadrature panel collapsed below machine resolution");
    }
    *worst = evaluate_panel(f, parent.left, mid);
    panels.push_back(evaluate_panel(f, mid, parent.right));
    std::tie(value, error) = totals();
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.left < y.left; });
  auto [sorted_value, sorted_error] = totals();
  return {sorted_value, sorted_error, static_cast<int>(panels.size())};
}

}  // namespace thermolength
