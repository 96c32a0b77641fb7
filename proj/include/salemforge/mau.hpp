#pragma once

// Multiplicatively independent sequences of algebraic integers on the unit
// circle, grown two entries at a time from McMullen pairs with
// n(k) = 360k + 19 and prime d(k) = 180k + 7.

#include <gmpxx.h>

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "salemforge/mcmullen.hpp"
#include "salemforge/primes.hpp"
#include "salemforge/relation.hpp"

namespace salemforge {

enum class MauRole { alpha, beta };

std::string to_string(MauRole r);

struct MauEntry {
  ComplexBall value;
  RealBall argument;  // arg(value) / 2 pi in [0, 1)
  unsigned long source_n = 0;
  MauRole role = MauRole::alpha;
};

struct ExtensionCertificate {
  std::uint64_t k = 0;
  std::uint64_t q = 0;  // d(k)
  unsigned long n = 0;  // n(k)
  PrimalityWitness primality;
  mpz_class degree_bound_before;
  bool q_exceeds_bound = false;
  std::size_t deg_phi = 0;
  std::size_t deg_r = 0;
  std::vector<CyclotomicFactor> cyclotomic_part;
  bool cyclotomic_matches_class = false;
  IntPoly phi;  // minimal polynomial of delta = alpha beta
  ComplexBall delta;
  std::size_t delta_root_index = 0;  // index in the root set of phi
  int branch_sign = 1;
  ComplexBall delta_prime;
  RealBall delta_prime_ratio_gap;  // | |alpha'/beta'| - 1 |
  std::size_t siegel_roots = 0;
  std::size_t nonsiegel_roots = 0;
  bool integrality_passed = false;
  RealBall integrality_residual;
  RealBall log_eta;
};

struct MAUSequence {
  std::vector<MauEntry> entries;
  mpz_class degree_bound = 1;  // product of 2 deg phi over distinct sources
  std::vector<ExtensionCertificate> certificates;
  RelationReport relation_audit;
  Bits precision_bits = 512;  // relation search precision P
  long bound = kDefaultRelationBound;
  std::string note;

  std::size_t length() const { return entries.size(); }
  std::vector<RealBall> arguments() const;
  const ExtensionCertificate& certificate_for(unsigned long source_n) const;
};

// Working precision for entry values: 2P + 64.
Bits mau_value_bits(Bits relation_bits);

// Appends the McMullen pair for the smallest k >= 1 with d(k) prime and
// d(k) > degree_bound, then audits all entries jointly.
MAUSequence mau_extend(const MAUSequence& seq, Bits precision_bits, long bound = kDefaultRelationBound);

// Same, for an explicit k >= 0 (k = 0 gives n = 19, q = 7).
MAUSequence mau_extend_at(const MAUSequence& seq, std::uint64_t k, Bits precision_bits, long bound = kDefaultRelationBound);

// length even, >= 2.
MAUSequence mau_build(std::size_t length, Bits precision_bits, long bound = kDefaultRelationBound);

// Sequence that starts from the pair at n(k0) and is extended to `length`.
MAUSequence mau_build_from(std::uint64_t k0, std::size_t length, Bits precision_bits, long bound = kDefaultRelationBound);

// First `length` entries with the certificates of their sources; the joint
// audit is re-run on the kept entries.
MAUSequence truncate(const MAUSequence& seq, std::size_t length);

RelationReport mau_audit(const MAUSequence& seq, long bound, Bits precision_bits);

nlohmann::json to_json(const MAUSequence& s);
MAUSequence mau_from_json(const nlohmann::json& j);

}  // namespace salemforge
