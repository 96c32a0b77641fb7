#pragma once

// Deterministic primality for 64-bit integers and the prime scan over
// d(k) = 180k + 7.

#include <cstdint>
#include <vector>

namespace salemforge {

// Trial division by every prime below 2^20, then a strong-pseudoprime test.
// Bases {2,3,5,7,11,13,17} settle n < 3.3e14; larger n use a 7-base set
// that is deterministic for all 64-bit integers.
bool is_prime(std::uint64_t n);

// Witness for a prime verdict: the largest trial divisor tried and the
// strong-pseudoprime bases used (empty when trial division settled it).
struct PrimalityWitness {
  std::uint64_t n = 0;
  bool prime = false;
  std::uint64_t smallest_factor = 0;  // nonzero when composite by trial division
  std::uint64_t trial_limit = 0;
  std::vector<std::uint64_t> bases;
};

PrimalityWitness primality_witness(std::uint64_t n);

// Fast variant for moduli near 2^62: small trial division plus the 64-bit
// deterministic base set.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

inline std::uint64_t d_of_k(std::uint64_t k) { return 180 * k + 7; }
inline std::uint64_t n_of_k(std::uint64_t k) { return 360 * k + 19; }

// First `count` values k >= k_min with 180k+7 prime. Throws PreconditionError
// when more than `scan_cap` candidates are examined.
std::vector<std::uint64_t> dk_prime_search(std::uint64_t k_min, std::size_t count, std::uint64_t scan_cap = 1000000);

}  // namespace salemforge
