#include <doctest.h>

#include "salemforge/coxeter.hpp"
#include "salemforge/errors.hpp"

using namespace salemforge;

namespace {

const IntPoly kPhi14{1, -1, 0, -1, 1, 0, 0, -1, 0, 0, 1, -1, 0, -1, 1};

// sum_k r_k x^(m-k) (x^2+1)^k, expanded directly
IntPoly expand_trace(const IntPoly& r) {
  std::size_t m = r.deg();
  IntPoly out, pw{1};
  for (std::size_t k = 0; k <= m; ++k) {
    out = out + IntPoly::monomial(1, m - k) * pw * r.coeff(k);
    pw = pw * IntPoly{1, 0, 1};
  }
  return out;
}

}  // namespace

TEST_CASE("E_19 factorization") {
  SalemFactorization f = salem_factor(19);
  std::vector<CyclotomicFactor> expect{{2, 1}, {5, 1}};
  CHECK(f.cyclotomic_part == expect);
  CHECK(f.cyclotomic_product() == IntPoly{1, 1} * IntPoly{1, 1, 1, 1, 1});
  CHECK(f.salem_candidate == kPhi14);
  CHECK(f.cyclotomic_product() * f.salem_candidate == en_from_formula(19));
  CHECK(f.residue_class == 19);
}

TEST_CASE("formula agrees with the reflection-matrix product") {
  for (unsigned long n = 10; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(en_from_matrix(n) == en_from_formula(n));
  }
}

TEST_CASE("reflections") {
  CoxeterSystem s = coxeter_system(12);
  IntMatrix id = identity_matrix(12);
  for (const auto& r : s.reflections) CHECK(matmul(r, r) == id);
  for (unsigned long n = 10; n <= 30; ++n) {
    IntMatrix g = gram_matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
      IntMatrix r = reflection_matrix(g, k);
      CHECK(matmul(matmul(transpose(r), g), r) == g);
    }
  }
  IntMatrix w = id;
  for (const auto& r : s.reflections) w = matmul(w, r);
  CHECK(w == s.coxeter_matrix);
  CHECK(charpoly(w) == en_from_formula(12));
  for (unsigned long n = 10; n <= 20; ++n) {
    mpz_class d = determinant(gram_matrix(n));
    CHECK(abs(d) == n - 9);
  }
}

TEST_CASE("E_10 is Lehmer's polynomial") {
  CHECK(en_from_formula(10) == IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  SalemFactorization f = salem_factor(10);
  CHECK(f.cyclotomic_part.empty());
}

TEST_CASE("cyclotomic part is periodic modulo 360") {
  for (unsigned long n = 10; n <= 30; ++n) {
    CAPTURE(n);
    SalemFactorization a = salem_factor(n), b = salem_factor(n + 360);
    CHECK(a.cyclotomic_part == b.cyclotomic_part);
    CHECK(b.cyclotomic_product() * b.salem_candidate == b.e_n);
  }
  CHECK(salem_factor(379).cyclotomic_part == salem_factor(19).cyclotomic_part);
}

TEST_CASE("known cyclotomic parts") {
  CHECK(salem_factor(25).cyclotomic_product() == IntPoly{1, 1} * IntPoly{1, 0, 0, -1, 0, 0, 1});
  CHECK(salem_factor(37).cyclotomic_product() == IntPoly{1, 1} * IntPoly{1, 0, 0, 0, 1});
  CHECK(salem_factor(43).cyclotomic_product() == IntPoly{1, 1} * cyclotomic(18));
}

TEST_CASE("fast path for large n") {
  SalemFactorization f = salem_factor(739);
  CHECK(f.fast_path);
  CHECK(f.cyclotomic_part == salem_factor(19).cyclotomic_part);
  CHECK(f.salem_candidate.deg() == 734);
  CHECK(f.cyclotomic_product() * f.salem_candidate == f.e_n);
  for (unsigned long d : {3ul, 7ul, 10ul, 360ul, 367ul})
    CHECK(!divmod(f.salem_candidate, cyclotomic(d)).remainder.is_zero());
}

TEST_CASE("Salem trace") {
  IntPoly r = salem_trace(kPhi14);
  CHECK(r.deg() == 7);
  CHECK(r.is_monic());
  CHECK(expand_trace(r) == kPhi14);
  for (unsigned long n : {25ul, 31ul, 379ul}) {
    IntPoly phi = salem_factor(n).salem_candidate;
    CHECK(expand_trace(salem_trace(phi)) == phi);
  }
  CHECK(salem_trace(salem_factor(739).salem_candidate).deg() == 367);
  CHECK_THROWS_AS(salem_trace(IntPoly{1, 2, 3}), PreconditionError);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(en_from_formula(9), PreconditionError);
  CHECK_THROWS_AS(salem_factor(en_from_formula(19), 20), PreconditionError);
}

TEST_CASE("cyclotomic exclusion filter") {
  IntPoly e = en_from_formula(19);
  CHECK(cyclotomic_excluded(e, 3));
  CHECK_FALSE(cyclotomic_excluded(e, 5));
  CHECK_FALSE(cyclotomic_excluded(e, 2));
  auto phi = totients(12);
  CHECK(phi[12] == 4);
  CHECK(phi[7] == 6);
}
