#include <doctest.h>

#include <cmath>
#include <complex>

#include "salemforge/coxeter.hpp"
#include "salemforge/errors.hpp"
#include "salemforge/roots.hpp"

using namespace salemforge;

namespace {

const IntPoly kPhi14{1, -1, 0, -1, 1, 0, 0, -1, 0, 0, 1, -1, 0, -1, 1};

long double horner(const IntPoly& p, long double x) {
  long double v = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeffs()[i].get_d();
  return v;
}

long double bisect(const IntPoly& p, long double lo, long double hi) {
  long double flo = horner(p, lo);
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2, fm = horner(p, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

std::vector<RootTag> tags(const RootSet& rs) {
  std::vector<RootTag> t;
  for (const auto& r : rs.roots) t.push_back(r.tag);
  return t;
}

}  // namespace

TEST_CASE("Salem pattern of phi_14") {
  RootSet rs = isolate_roots(kPhi14, 256);
  REQUIRE(rs.roots.size() == 14);
  CHECK(rs.count(RootTag::real_gt_1) == 1);
  CHECK(rs.count(RootTag::real_in_01) == 1);
  CHECK(rs.count(RootTag::on_circle) == 12);
  SalemCertificate c = classify_salem(rs);
  CHECK(c.circle_count == 12);
  long double eta = bisect(kPhi14, 1.1L, 2.0L);
  CHECK(std::fabs(c.eta.mid().to_double() - static_cast<double>(eta)) < 1e-12);
  CHECK(std::fabs(c.eta.mid().to_double() - 1.31819750443169) < 1e-13);
  CHECK(cmp(c.eta.rad(), rad_pow2(-128)) <= 0);
  ComplexBall inv = inverse(rs.roots[c.eta_index].value);
  CHECK(inv.overlaps(rs.roots[c.inverse_index].value));
}

TEST_CASE("reciprocal pairing") {
  for (unsigned long n : {10ul, 19ul, 25ul, 31ul}) {
    IntPoly phi = salem_factor(n).salem_candidate;
    RootSet rs = isolate_roots(phi, 256);
    for (const auto& r : rs.roots) {
      ComplexBall inv = inverse(r.value);
      std::size_t hits = 0;
      for (const auto& s : rs.roots) hits += inv.overlaps(s.value) ? 1 : 0;
      CHECK(hits == 1);
      std::size_t conj_hits = 0;
      for (const auto& s : rs.roots) conj_hits += r.value.conj().overlaps(s.value) ? 1 : 0;
      CHECK(conj_hits == 1);
    }
  }
}

TEST_CASE("classifications are stable under precision changes") {
  for (unsigned long n : {10ul, 19ul, 43ul}) {
    IntPoly phi = salem_factor(n).salem_candidate;
    RootSet a = isolate_roots(phi, 128), b = isolate_roots(phi, 256), c = isolate_roots(phi, 512);
    CHECK(tags(a) == tags(b));
    CHECK(tags(b) == tags(c));
    for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i].value.overlaps(c.roots[i].value));
    CHECK(classify_salem(a).eta.overlaps(classify_salem(c).eta));
  }
}

TEST_CASE("product of roots equals the constant coefficient") {
  for (const IntPoly& p : {kPhi14, IntPoly{6, -5, 1}, IntPoly{-7, 0, 3, 1, 0, 2}}) {
    RootSet rs = isolate_roots(p, 256);
    std::complex<long double> prod = 1;
    for (const auto& r : rs.roots)
      for (int m = 0; m < r.multiplicity; ++m) prod *= std::complex<long double>(r.value.re().to_double(), r.value.im().to_double());
    long double sign = p.deg() % 2 == 0 ? 1 : -1;
    long double expect = sign * p.coeff(0).get_d() / p.leading().get_d();
    CHECK(std::abs(prod - std::complex<long double>(expect, 0)) < 1e-12L);
  }
}

TEST_CASE("multiple roots") {
  IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
  RootSet rs = isolate_roots(p, 128);
  REQUIRE(rs.roots.size() == 2);
  int total = 0;
  for (const auto& r : rs.roots) total += r.multiplicity;
  CHECK(total == 3);
}

TEST_CASE("rejections") {
  IntPoly two_outside = IntPoly{1, -3, 1} * IntPoly{1, -4, 1};
  CHECK_THROWS_AS(classify_salem(isolate_roots(two_outside, 128)), NotSalemError);
  CHECK_THROWS_AS(classify_salem(isolate_roots(IntPoly{1, 2, 3}, 128)), PreconditionError);
  CHECK_THROWS_AS(classify_salem(isolate_roots(cyclotomic(7), 128)), NotSalemError);
}

TEST_CASE("entropy") {
  EntropyValue z = entropy_from_charpoly(cyclotomic(7) * cyclotomic(12), 128);
  CHECK(z.exact_zero);
  IntPoly e19 = en_from_formula(19) * IntPoly{-1, 1};
  EntropyValue h = entropy_from_charpoly(e19, 256);
  CHECK_FALSE(h.exact_zero);
  CHECK(h.value.is_positive());
  long double eta = bisect(kPhi14, 1.1L, 2.0L);
  CHECK(std::fabs(h.value.mid().to_double() - std::log(static_cast<double>(eta))) < 1e-12);
  RealBall direct = log(classify_salem(isolate_roots(kPhi14, 256)).eta);
  CHECK(h.value.overlaps(direct));
}

TEST_CASE("Coxeter locator agrees with generic isolation") {
  for (unsigned long n : {13ul, 19ul, 25ul, 31ul, 43ul}) {
    CAPTURE(n);
    SalemFactorization f = salem_factor(n);
    RootSet a = isolate_coxeter_salem_roots(n, f.salem_candidate, f.orders(), 256);
    RootSet b = isolate_roots(f.salem_candidate, 256);
    REQUIRE(a.roots.size() == b.roots.size());
    for (const auto& r : a.roots) {
      std::size_t hits = 0;
      for (const auto& s : b.roots)
        if (r.value.overlaps(s.value)) {
          ++hits;
          CHECK(r.tag == s.tag);
        }
      CHECK(hits == 1);
    }
    CHECK(classify_salem(a).eta.overlaps(classify_salem(b).eta));
  }
}

TEST_CASE("Lehmer's number") {
  IntPoly e10 = en_from_formula(10);
  SalemFactorization f = salem_factor(10);
  RootSet rs = isolate_coxeter_salem_roots(10, f.salem_candidate, f.orders(), 256);
  SalemCertificate c = classify_salem(rs);
  long double eta = bisect(e10, 1.1L, 1.5L);
  CHECK(std::fabs(c.eta.mid().to_double() - static_cast<double>(eta)) < 1e-12);
  CHECK(std::fabs(c.eta.mid().to_double() - 1.17628081825991750654) < 1e-14);
}

TEST_CASE("large n through the locator") {
  SalemFactorization f = salem_factor(739);
  RootSet rs = isolate_coxeter_salem_roots(739, f.salem_candidate, f.orders(), 256);
  SalemCertificate c = classify_salem(rs);
  CHECK(c.circle_count == 732);
  CHECK(std::fabs(c.eta.mid().to_double() - 1.3247179572) < 1e-6);
}
