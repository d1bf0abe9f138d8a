// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thermolength/eos.hpp"

namespace thermolength {

/// Uniform draws from a 64-bit Mersenne Twister using the top 53 bits, so a
/// seed yields the same sequence on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// One randomized isentrope: model, entropy and v1 < v2.
struct IsentropeInstance {
  GasModel model;
  double s;
  double v1;
  double v2;
};

/// cv in [R, 5R], s in [-2, 2], 0.1 <= v1 < v2 <= 10, b in [0, 0.5 v1).
IsentropeInstance random_ideal_like(Sampler& rng, Variant variant);

/// Any of the four variants. VanDerWaals instances keep a small enough that
/// (d^2u/dv^2)_s > 0 over [v1, v2]; Custom instances use
/// f1 = v^(-R/cv) + c, f2 = d ln v with c, d >= 0.
IsentropeInstance random_any(Sampler& rng, Variant variant);

struct IdentityReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string first_error;

  bool passed() const { return failures == 0 && trials > 0; }
};

/// Runs every identity check with `trials` randomized instances each.
/// Deterministic for a given seed. Throws DomainError if trials < 1.
std::vector<IdentityReport> run_verification(std::uint64_t seed, int trials);

/// Same checks against one fixed model (each instance draws only s and
/// volumes). Checks that do not apply to the variant are skipped.
std::vector<IdentityReport> run_verification(const GasModel& model, std::uint64_t seed,
                                             int trials);

}  // namespace thermolength
