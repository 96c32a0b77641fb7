#pragma once

// Dense univariate polynomials over Z with GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace salemforge {

class IntPoly {
 public:
  IntPoly() = default;
  // Coefficients in ascending degree order; trailing zeros are dropped.
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const mpz_class& c, std::size_t k);
  static IntPoly constant(const mpz_class& c);

  bool is_zero() const noexcept { return c_.empty(); }
  // Empty for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  // Degree of a polynomial known to be nonzero; throws on zero.
  std::size_t deg() const;

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  // Coefficient of x^k (zero beyond the degree).
  mpz_class coeff(std::size_t k) const;
  const mpz_class& leading() const;
  bool is_monic() const;

  IntPoly derivative() const;
  IntPoly reverse() const;
  IntPoly negated() const;
  // Largest absolute coefficient.
  mpz_class height() const;
  // gcd of the coefficients (non-negative); zero for the zero polynomial.
  mpz_class content() const;
  IntPoly primitive_part() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const mpz_class& s);

struct DivMod {
  IntPoly quotient;
  IntPoly remainder;
};

// Division by a monic divisor; throws NotMonicError otherwise.
DivMod divmod(const IntPoly& p, const IntPoly& q);

// Exact division where q | p over Z is known; throws ConsistencyError if the
// division leaves a remainder or a non-integral quotient.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

// Pseudo-remainder lc(q)^(deg p - deg q + 1) * p mod q.
IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q);

// Primitive gcd over Z[x] (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Yun's square-free decomposition: p = c * prod f_i^{m_i}, the f_i pairwise
// coprime, square-free, primitive with positive leading coefficient.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

mpz_class eval_int(const IntPoly& p, const mpz_class& t);

// Palindromic coefficient sequence: x^deg p(1/x) = p(x).
bool is_reciprocal(const IntPoly& p);
// x^deg p(1/x) = +-p(x); the root multiset is closed under z -> 1/z.
bool is_reciprocal_up_to_sign(const IntPoly& p);

// d-th cyclotomic polynomial by recursive exact division of x^d - 1.
IntPoly cyclotomic(unsigned long d);

// x^k - 1
IntPoly x_pow_minus_one(std::size_t k);

nlohmann::json to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

}  // namespace salemforge
