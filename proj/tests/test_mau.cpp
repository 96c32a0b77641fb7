#include <doctest.h>

#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/mau.hpp"
#include "salemforge/primes.hpp"

using namespace salemforge;

namespace {

const MAUSequence& built() {
  static const MAUSequence s = mau_build(4, 512);
  return s;
}

}  // namespace

TEST_CASE("primality against a sieve") {
  const std::uint64_t N = 200000;
  std::vector<bool> composite(N + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t i = 2; i * i <= N; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= N; j += i) composite[j] = true;
  for (std::uint64_t n = 0; n <= N; ++n) {
    if (is_prime(n) == composite[n]) {
      FAIL("is_prime disagrees with the sieve at " << n);
    }
    if (is_prime_u64(n) == composite[n]) {
      FAIL("is_prime_u64 disagrees with the sieve at " << n);
    }
  }
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(3825123056546413051ull));
  PrimalityWitness w = primality_witness(187);
  CHECK_FALSE(w.prime);
  CHECK(w.smallest_factor == 11);
}

TEST_CASE("arithmetic progression") {
  CHECK(d_of_k(1) == 187);
  CHECK(d_of_k(2) == 367);
  CHECK(n_of_k(2) == 739);
  CHECK(dk_prime_search(1, 3) == std::vector<std::uint64_t>{2, 3, 4});
  for (std::uint64_t k : dk_prime_search(1, 30)) CHECK(is_prime(d_of_k(k)));
}

TEST_CASE("mau_build(4) certificate chain") {
  const MAUSequence& s = built();
  REQUIRE(s.length() == 4);
  REQUIRE(s.certificates.size() == 2);
  const ExtensionCertificate& a = s.certificates[0];
  const ExtensionCertificate& b = s.certificates[1];
  CHECK(a.k == 2);
  CHECK(a.q == 367);
  CHECK(a.n == 739);
  CHECK(b.k == 9);
  CHECK(b.q == 1627);
  CHECK(b.n == 3259);
  for (const auto& c : s.certificates) {
    CHECK(c.primality.prime);
    CHECK(c.deg_phi == 360 * c.k + 14);
    CHECK(c.deg_r == c.q);
    CHECK(c.q_exceeds_bound);
    CHECK(mpz_class(static_cast<unsigned long>(c.q)) > c.degree_bound_before);
    CHECK(c.cyclotomic_matches_class);
    CHECK(c.integrality_passed);
    CHECK(c.nonsiegel_roots > 0);
    CHECK(!c.delta_prime_ratio_gap.contains_zero());
  }
  CHECK(a.degree_bound_before == 1);
  CHECK(b.degree_bound_before == 1468);
  CHECK(s.degree_bound == 9553744);
  CHECK(s.relation_audit.outcome == RelationOutcome::NoRelationFound);
  CHECK(s.relation_audit.gap.is_positive());
  for (const auto& e : s.entries) {
    CHECK(unit_circle_distance(e.value).contains_zero());
    CHECK(cmp(e.value.rad(), rad_pow2(-1024)) < 0);
  }
}

TEST_CASE("JSON round trip re-audits") {
  const MAUSequence& s = built();
  nlohmann::json j = to_json(s);
  MAUSequence back = mau_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.length() == 4);
  CHECK(back.degree_bound == s.degree_bound);
  CHECK(back.relation_audit.outcome == RelationOutcome::NoRelationFound);
  for (std::size_t i = 0; i < 4; ++i) CHECK(back.entries[i].value.overlaps(s.entries[i].value));
  CHECK(back.certificates[1].delta_root_index == s.certificates[1].delta_root_index);

  nlohmann::json bad = j;
  bad["degree_bound"] = "1469";
  CHECK_THROWS_AS(mau_from_json(bad), PreconditionError);
  nlohmann::json missing = j;
  missing.erase("entries");
  CHECK_THROWS_AS(mau_from_json(missing), PreconditionError);
}

TEST_CASE("truncation keeps the certificates it needs") {
  MAUSequence t = truncate(built(), 3);
  CHECK(t.length() == 3);
  CHECK(t.certificates.size() == 2);
  MAUSequence u = truncate(built(), 2);
  CHECK(u.certificates.size() == 1);
  CHECK(u.degree_bound == 1468);
  CHECK(u.relation_audit.outcome == RelationOutcome::NoRelationFound);
  CHECK_THROWS_AS(truncate(built(), 5), PreconditionError);
}

TEST_CASE("sequence starting at n = 19") {
  MAUSequence s = mau_build_from(0, 4, 256);
  REQUIRE(s.certificates.size() == 2);
  CHECK(s.certificates[0].n == 19);
  CHECK(s.certificates[0].q == 7);
  CHECK(s.certificates[1].n == 739);
  CHECK(s.relation_audit.outcome == RelationOutcome::NoRelationFound);
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(mau_build(3, 256), PreconditionError);
  CHECK_THROWS_AS(mau_build(0, 256), PreconditionError);
  CHECK_THROWS_AS(mau_extend_at(MAUSequence{}, 1, 256), PreconditionError);
  MAUSequence s = mau_extend_at(MAUSequence{}, 2, 256);
  CHECK_THROWS_AS(mau_extend_at(s, 2, 256), PreconditionError);
  CHECK_THROWS_AS(mau_extend_at(s, 0, 256), PreconditionError);
}
