#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "salemforge/coxeter.hpp"
#include "salemforge/errors.hpp"
#include "salemforge/polyring.hpp"

using namespace salemforge;

namespace {

IntPoly random_poly(std::mt19937_64& rng, std::size_t deg, long h, bool monic = false) {
  std::uniform_int_distribution<long> c(-h, h);
  std::vector<mpz_class> v(deg + 1);
  for (auto& x : v) x = c(rng);
  if (monic) v.back() = 1;
  if (v.back() == 0) v.back() = 1;
  return IntPoly(v);
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(IntPoly{1, 1} * IntPoly{-1, 1} == IntPoly{-1, 0, 1});
  IntPoly p{3, 0, -2, 7};
  CHECK(p + IntPoly() == p);
  IntPoly q = IntPoly{1, 1, 1} * IntPoly{1, 1};
  CHECK(q == IntPoly{1, 2, 2, 1});
  CHECK(eval_int(q, 2) == 21);
  CHECK(eval_int(IntPoly{1, 1, 1}, 2) * eval_int(IntPoly{1, 1}, 2) == 21);
  CHECK((p - p).is_zero());
  CHECK((IntPoly{2, 3} * IntPoly{0, 0, 5}).deg() == 3);
}

TEST_CASE("zero polynomial") {
  IntPoly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK_THROWS_AS(z.deg(), PreconditionError);
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{1, 0, 0}.deg() == 0);
}

TEST_CASE("divmod") {
  DivMod d = divmod(IntPoly{6, 2, 2, 1}, IntPoly{1, 1, 1});
  CHECK(d.quotient == IntPoly{1, 1});
  CHECK(d.remainder == IntPoly{5});

  IntPoly p = IntPoly{-1, 1} * IntPoly{4, 0, 3, 1};
  CHECK(divmod(p, IntPoly{-1, 1}).remainder.is_zero());

  CHECK_THROWS_AS(divmod(p, IntPoly{1, 2}), NotMonicError);
  CHECK_THROWS_AS(divmod(p, IntPoly()), PreconditionError);

  IntPoly e = en_from_formula(19);
  DivMod a = divmod(e * IntPoly{-1, 1}, IntPoly{1, 1, 1});
  CHECK(a.remainder == IntPoly{-2, -1});
  CHECK(eval_int(e, -2) == -eval_int(a.quotient, -2));
}

TEST_CASE("divmod round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    IntPoly q = random_poly(rng, 1 + rng() % 20, 1000000, true);
    IntPoly p = random_poly(rng, rng() % 51, 1000000);
    DivMod d = divmod(p, q);
    CHECK(q * d.quotient + d.remainder == p);
    if (!d.remainder.is_zero()) CHECK(d.remainder.deg() < q.deg());
  }
}

TEST_CASE("ring axioms and evaluation homomorphism") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    IntPoly a = random_poly(rng, rng() % 15, 1000), b = random_poly(rng, rng() % 15, 1000),
            c = random_poly(rng, rng() % 15, 1000);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    long x = static_cast<long>(rng() % 21) - 10;
    CHECK(eval_int(a * b, x) == eval_int(a, x) * eval_int(b, x));
  }
}

TEST_CASE("reciprocity") {
  CHECK(is_reciprocal(IntPoly{1, 1, 0, 1, 1}));
  CHECK(is_reciprocal(IntPoly{1, -3, 1}));
  CHECK_FALSE(is_reciprocal(IntPoly{0, 1, 1}));
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    IntPoly p = random_poly(rng, 1 + rng() % 12, 50);
    if (p.coeff(0) == 0) continue;
    CHECK(is_reciprocal(p * p.reverse()));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
  CHECK(cyclotomic(105).coeff(7) == -2);
  for (unsigned long d = 1; d <= 200; ++d) {
    IntPoly prod{1};
    for (unsigned long e = 1; e <= d; ++e)
      if (d % e == 0) prod = prod * cyclotomic(e);
    CHECK(prod == x_pow_minus_one(d));
    CHECK(divmod(x_pow_minus_one(d), cyclotomic(d)).remainder.is_zero());
  }
}

TEST_CASE("serialization") {
  IntPoly p({mpz_class("123456789012345678901234567890"), mpz_class(-4), mpz_class(1)});
  nlohmann::json j = to_json(p);
  CHECK(j[0] == "123456789012345678901234567890");
  CHECK(poly_from_json(j) == p);
  CHECK(to_json(IntPoly()).empty());
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::array({"1", "x"})), PreconditionError);
}
