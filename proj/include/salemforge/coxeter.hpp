#pragma once

// Coxeter polynomials E_n of the E_n(-1) lattice: closed formula, reflection
// matrix oracle, cyclotomic stripping and the Salem trace polynomial.

#include <gmpxx.h>

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "salemforge/polyring.hpp"

namespace salemforge {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
mpz_class determinant(const IntMatrix& a);  // Bareiss

struct CoxeterSystem {
  unsigned long n = 0;
  IntMatrix gram;
  std::vector<IntMatrix> reflections;
  IntMatrix coxeter_matrix;  // R_0 R_1 ... R_{n-1}
};

// Gram matrix of s_0..s_{n-1}: -2 on the diagonal, 1 on the chain
// s_1 - ... - s_{n-1} and on the extra edge s_0 - s_3.
IntMatrix gram_matrix(unsigned long n);
// Matrix of x -> x + (x, s_k) s_k in the basis s_0..s_{n-1}.
IntMatrix reflection_matrix(const IntMatrix& gram, std::size_t k);
CoxeterSystem coxeter_system(unsigned long n);

// Exact characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
IntPoly charpoly(const IntMatrix& a);

IntPoly en_from_formula(unsigned long n);
IntPoly en_from_matrix(unsigned long n);

struct CyclotomicFactor {
  unsigned long d = 0;
  int multiplicity = 0;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct SalemFactorization {
  unsigned long n = 0;
  IntPoly e_n;
  std::vector<CyclotomicFactor> cyclotomic_part;  // ascending d
  IntPoly salem_candidate;
  unsigned long residue_class = 0;  // n mod 360
  bool fast_path = false;
  unsigned long search_limit = 0;  // largest d examined
  std::string note;

  IntPoly cyclotomic_product() const;
  std::vector<unsigned long> orders() const;
};

inline constexpr unsigned long kDefaultCyclotomicCap = 10000;
inline constexpr std::size_t kFastPathDegree = 500;

// Strips every Phi_d dividing e_n. Degree <= 500: all d with totient(d) <= deg
// and d <= 4 deg^2. Larger: the factors of the smallest n0 >= 10 in the same
// class mod 360 first, then every d <= cap.
SalemFactorization salem_factor(const IntPoly& e_n, unsigned long n, unsigned long cap = kDefaultCyclotomicCap);
SalemFactorization salem_factor(unsigned long n, unsigned long cap = kDefaultCyclotomicCap);

// Monic r of degree m with x^m r(x + 1/x) = phi; the identity is re-verified
// by an independent Horner expansion.
IntPoly salem_trace(const IntPoly& phi);

// True when Phi_d certainly does not divide f (nonzero value at a primitive
// d-th root of unity modulo a prime p = 1 mod d). False means "maybe".
bool cyclotomic_excluded(const IntPoly& f, unsigned long d);

std::vector<unsigned long> totients(unsigned long limit);

nlohmann::json to_json(const SalemFactorization& f);

}  // namespace salemforge
