#include <doctest.h>

#include <cmath>
#include <complex>

#include "salemforge/coxeter.hpp"
#include "salemforge/errors.hpp"
#include "salemforge/mcmullen.hpp"

using namespace salemforge;

namespace {

using cd = std::complex<double>;

cd mid(const ComplexBall& z) { return {z.re().to_double(), z.im().to_double()}; }

bool small(const ComplexBall& r, long e) { return r.contains_zero() && cmp(r.rad(), rad_pow2(e)) < 0; }

}  // namespace

TEST_CASE("branch residuals at n = 19") {
  SiegelScan scan = scan_siegel_roots(salem_factor(19).salem_candidate, 256);
  CHECK(scan.circle.size() == 12);
  CHECK(scan.siegel.size() == 8);
  CHECK(scan.nonsiegel.size() == 4);
  for (const auto& c : scan.circle) {
    REQUIRE(c.branches.size() == 2);
    for (const Branch& b : c.branches) {
      CHECK(small(b.vieta_product, -100));
      CHECK(small(b.vieta_sum, -100));
      CHECK(small(b.quad_alpha, -100));
      CHECK(small(b.quad_beta, -100));
      CHECK(b.cls == c.cls);
    }
  }
}

TEST_CASE("branch classes agree with a double-precision oracle") {
  SiegelScan scan = scan_siegel_roots(salem_factor(19).salem_candidate, 256);
  for (const auto& c : scan.circle) {
    cd d = mid(c.delta.value);
    cd s = d * (1.0 + d) / (1.0 + d + d * d);
    cd root = std::sqrt(s * s - 4.0 * d);
    cd a = (s + root) / 2.0, b = (s - root) / 2.0;
    bool on_circle = std::fabs(std::abs(a) - 1) < 1e-9 && std::fabs(std::abs(b) - 1) < 1e-9;
    CHECK(on_circle == (c.cls == BranchClass::siegel));
    const Branch& br = c.branches.front();
    cd ma = mid(br.alpha), mb = mid(br.beta);
    bool same = (std::abs(ma - a) < 1e-9 && std::abs(mb - b) < 1e-9) || (std::abs(ma - b) < 1e-9 && std::abs(mb - a) < 1e-9);
    CHECK(same);
    CHECK(std::abs(ma * mb - d) < 1e-12);
  }
}

TEST_CASE("circle root counts") {
  struct Row {
    unsigned long n;
    std::size_t circle, siegel, nonsiegel;
  };
  for (Row r : {Row{19, 12, 8, 4}, Row{25, 16, 12, 4}, Row{31, 28, 22, 6}, Row{37, 30, 24, 6}, Row{43, 34, 26, 8}}) {
    CAPTURE(r.n);
    McMullenPairData d = mcmullen_data(r.n, 256);
    CHECK(d.scan.circle.size() == r.circle);
    CHECK(d.scan.siegel.size() == r.siegel);
    CHECK(d.scan.nonsiegel.size() == r.nonsiegel);
    CHECK(d.branch().cls == BranchClass::siegel);
    REQUIRE(d.delta_prime_branch() != nullptr);
    CHECK(d.delta_prime_branch()->cls == BranchClass::non_siegel);
    CHECK(!d.delta_prime_branch()->ratio_gap.contains_zero());
    CHECK(d.entropy.is_positive());
  }
}

TEST_CASE("integrality certificates") {
  for (unsigned long n : {19ul, 25ul, 31ul, 37ul, 43ul, 379ul, 739ul}) {
    CAPTURE(n);
    IntegralityCertificate c = integrality_certificate(n);
    CHECK(c.passed());
    CHECK(c.remainder1 == IntPoly{-2, -1});
    CHECK(c.a_at_minus2 == -eval_int(en_from_formula(n), -2));
  }
  CHECK_FALSE(integrality_certificate(20).passed());
}

TEST_CASE("numeric integrality residual") {
  McMullenPairData d = mcmullen_data(19, 256);
  CHECK(d.integrality_residual.contains_zero());
  CHECK(cmp(d.integrality_residual.rad(), rad_pow2(-128)) <= 0);
  RealBall r = numeric_integrality_check(d.certificate, d.delta().value);
  CHECK(r.contains_zero());
}

TEST_CASE("eigenvalue_branches preconditions") {
  SiegelScan scan = scan_siegel_roots(salem_factor(19).salem_candidate, 256);
  const CertifiedRoot& delta = scan.circle.front().delta;
  CHECK_THROWS_AS(eigenvalue_branches(IntPoly{1, 1}, delta, 256), PreconditionError);
  CHECK_NOTHROW(eigenvalue_branches(salem_factor(19).salem_candidate, delta, 256));

  RootSet w = isolate_roots(IntPoly{1, 1, 1}, 256);
  for (const auto& r : w.roots) CHECK_THROWS_AS(eigenvalue_branches(IntPoly{1, 1, 1}, r, 256), PoleError);
}

TEST_CASE("mcmullen_data preconditions") {
  CHECK_THROWS_AS(mcmullen_data(20, 256), PreconditionError);
  CHECK_THROWS_AS(mcmullen_data(7, 256), PreconditionError);
}

TEST_CASE("locator and generic isolation give the same scan") {
  IntPoly phi = salem_factor(31).salem_candidate;
  SiegelScan a = scan_siegel_roots(phi, 256);
  SiegelScan b = mcmullen_data(31, 256).scan;
  REQUIRE(a.circle.size() == b.circle.size());
  for (const auto& c : a.circle) {
    std::size_t hits = 0;
    for (const auto& e : b.circle)
      if (c.delta.value.overlaps(e.delta.value)) {
        ++hits;
        CHECK(c.cls == e.cls);
      }
    CHECK(hits == 1);
  }
}
