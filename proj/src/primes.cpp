#include "salemforge/primes.hpp"

#include <array>

#include "salemforge/errors.hpp"

namespace salemforge {

namespace {

constexpr std::uint64_t kTrialLimit = 1ULL << 20;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialLimit, true);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i < kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j < kTrialLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 7> kSmallBases{2, 3, 5, 7, 11, 13, 17};
constexpr std::array<std::uint64_t, 7> kWideBases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
constexpr std::uint64_t kSmallBasesLimit = 341550071728321ULL;

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

PrimalityWitness primality_witness(std::uint64_t n) {
  PrimalityWitness w;
  w.n = n;
  if (n < 2) return w;
  for (std::uint32_t p : small_primes()) {
    std::uint64_t pp = p;
    if (pp * pp > n) {
      w.trial_limit = pp;
      w.prime = true;
      return w;
    }
    if (n % pp == 0) {
      w.trial_limit = pp;
      w.smallest_factor = pp;
      w.prime = n == pp;
      return w;
    }
  }
  w.trial_limit = kTrialLimit;
  if (n < kSmallBasesLimit) {
    w.bases.assign(kSmallBases.begin(), kSmallBases.end());
  } else {
    w.bases.assign(kWideBases.begin(), kWideBases.end());
  }
  w.prime = true;
  for (auto a : w.bases) {
    if (!strong_probable_prime(n, a)) {
      w.prime = false;
      break;
    }
  }
  return w;
}

bool is_prime(std::uint64_t n) { return primality_witness(n).prime; }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    if (n % p == 0) return n == p;
  }
  for (auto a : kWideBases) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

std::vector<std::uint64_t> dk_prime_search(std::uint64_t k_min, std::size_t count, std::uint64_t scan_cap) {
  if (k_min < 1) throw PreconditionError("dk_prime_search: k_min must be at least 1");
  std::vector<std::uint64_t> out;
  std::uint64_t scanned = 0;
  for (std::uint64_t k = k_min; out.size() < count; ++k) {
    if (++scanned > scan_cap) throw PreconditionError("dk_prime_search: scan cap exceeded");
    if (is_prime(d_of_k(k))) out.push_back(k);
  }
  return out;
}

}  // namespace salemforge
