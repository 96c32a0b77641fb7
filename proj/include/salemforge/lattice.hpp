#pragma once

// Exact integral LLL reduction (all Gram-Schmidt data kept as integers).

#include <gmpxx.h>

#include <vector>

namespace salemforge {

using IntVector = std::vector<mpz_class>;

struct LllResult {
  std::vector<IntVector> basis;
  // d[0] = 1, d[i] = Gram determinant of the first i vectors; |b*_i|^2 = d[i]/d[i-1].
  std::vector<mpz_class> d;
  long swaps = 0;
};

// Rows must be linearly independent. The Lovasz constant is num/den with
// 1/4 < num/den < 1.
LllResult lll_reduce(std::vector<IntVector> rows, long num = 99, long den = 100);

mpz_class dot(const IntVector& a, const IntVector& b);

}  // namespace salemforge
