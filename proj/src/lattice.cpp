#include "salemforge/lattice.hpp"

#include "salemforge/errors.hpp"

namespace salemforge {

mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Nearest integer to a/b for b > 0.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class twice = 2 * a + b;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  return q;
}

mpz_class exact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// Cohen, integral LLL; indices are 1-based internally.
LllResult lll_reduce(std::vector<IntVector> rows, long num, long den) {
  if (!(4 * num > den && num < den)) throw PreconditionError("lll_reduce: Lovasz constant must lie in (1/4, 1)");
  const std::size_t n = rows.size();
  LllResult out;
  if (n == 0) {
    out.d = {1};
    return out;
  }
  std::vector<IntVector> b(n + 1);
  for (std::size_t i = 0; i < n; ++i) b[i + 1] = std::move(rows[i]);
  std::vector<mpz_class> d(n + 1, 0);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1, 0));
  d[0] = 1;
  d[1] = dot(b[1], b[1]);
  if (d[1] == 0) throw PreconditionError("lll_reduce: zero vector in basis");

  auto red = [&](std::size_t k, std::size_t l) {
    mpz_class twice = 2 * abs(lam[k][l]);
    if (twice <= d[l]) return;
    mpz_class q = round_div(lam[k][l], d[l]);
    for (std::size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  auto swap = [&](std::size_t k, std::size_t kmax) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    mpz_class l = lam[k][k - 1];
    mpz_class B = exact(d[k - 2] * d[k] + l * l, d[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      mpz_class t = lam[i][k];
      lam[i][k] = exact(d[k] * lam[i][k - 1] - l * t, d[k - 1]);
      lam[i][k - 1] = exact(B * t + l * lam[i][k], d[k]);
    }
    d[k - 1] = B;
    ++out.swaps;
  };

  std::size_t k = 2, kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i) u = exact(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u == 0) throw PreconditionError("lll_reduce: rows are linearly dependent");
        }
      }
    }
    while (true) {
      red(k, k - 1);
      // den * d_k d_{k-2} < num * d_{k-1}^2 - den * lam^2
      mpz_class lhs = den * d[k] * d[k - 2];
      mpz_class rhs = num * d[k - 1] * d[k - 1] - den * lam[k][k - 1] * lam[k][k - 1];
      if (lhs < rhs) {
        swap(k, kmax);
        if (k > 2) --k;
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
      break;
    }
  }
  for (std::size_t i = 1; i <= n; ++i) out.basis.push_back(std::move(b[i]));
  out.d = std::move(d);
  return out;
}

}  // namespace salemforge
