// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace thermolength::fd {

/// Relative step for first derivatives.
inline constexpr double kFirstStep = 1e-5;
/// Relative step for second derivatives. A 1e-5 step leaves O(eps/h^2) ~ 1e-6
/// cancellation noise, too coarse for the 1e-5 relative checks built on it.
inline constexpr double kSecondStep = 1e-3;

/// Step h = rel * max(scale, |x|), shrunk so that x - 2h stays at least one
/// step above `lower` (pass -inf when the coordinate is unbounded). `scale` is
/// the coordinate's natural unit: 1 for volume, cv for entropy, since u varies
/// as exp(s / cv).
inline double step_for(double x, double rel, double lower, double scale = 1.0) {
  double h = rel * std::max(scale, std::abs(x));
  if (std::isfinite(lower)) h = std::min(h, 0.1 * (x - lower));
  return h;
}

/// Central difference with one level of Richardson extrapolation.
template <typename F>
double first_derivative(F&& f, double x, double rel = kFirstStep,
                        double lower = -std::numeric_limits<double>::infinity(),
                        double scale = 1.0) {
  const double h = step_for(x, rel, lower, scale);
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h);
  return (4.0 * d1 - d2) / 3.0;
}

template <typename F>
double second_derivative(F&& f, double x, double rel = kSecondStep,
                         double lower = -std::numeric_limits<double>::infinity(),
                         double scale = 1.0) {
  const double h = step_for(x, rel, lower, scale);
  const double f0 = f(x);
  const double d1 = (f(x + h) - 2.0 * f0 + f(x - h)) / (h * h);
  const double d2 = (f(x + 2.0 * h) - 2.0 * f0 + f(x - 2.0 * h)) / (4.0 * h * h);
  return (4.0 * d1 - d2) / 3.0;
}

/// Mixed partial d^2 f / dx dy by the four-point central stencil, Richardson once.
template <typename F>
double mixed_derivative(F&& f, double x, double y, double rel = kSecondStep,
                        double lower_y = -std::numeric_limits<double>::infinity(),
                        double scale_x = 1.0) {
  const double hx = step_for(x, rel, -std::numeric_limits<double>::infinity(), scale_x);
  const double hy = step_for(y, rel, lower_y);
  auto stencil = [&](double k) {
    return (f(x + k * hx, y + k * hy) - f(x + k * hx, y - k * hy) - f(x - k * hx, y + k * hy) +
            f(x - k * hx, y - k * hy)) /
           (4.0 * k * k * hx * hy);
  };
  return (4.0 * stencil(1.0) - stencil(2.0)) / 3.0;
}

}  // namespace thermolength::fd
