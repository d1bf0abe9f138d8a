// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace thermolength::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 domain or validation
/// error, 3 numerical failure (convergence, instability, failed identity).
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNumerical = 3,
};

/// Environment variable overriding the default quadrature rel_tol.
inline constexpr const char* kRelTolEnv = "THERMOLENGTH_REL_TOL";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermolength::cli
