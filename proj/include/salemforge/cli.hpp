#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "salemforge/ball.hpp"

namespace salemforge {

struct RunConfig {
  Bits precision_bits = 256;
  long relation_bound = 32;
  std::string output;  // empty: stdout
};

enum ExitCode : int { kExitOk = 0, kExitPrecondition = 1, kExitConsistency = 2, kExitUsage = 64 };

// Largest n for which `coxeter factor` also factors the matrix-route polynomial.
inline constexpr unsigned long kMatrixRouteLimit = 120;

// argv[0] is the program name. Reports go to `out` (or --out), usage and
// diagnostics to `err`.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace salemforge
