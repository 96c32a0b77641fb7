#include "salemforge/coxeter.hpp"

#include <algorithm>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/primes.hpp"

namespace salemforge {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<mpz_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

mpz_class determinant(const IntMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix gram_matrix(unsigned long n) {
  if (n < 4) throw PreconditionError("gram_matrix: n must be at least 4");
  IntMatrix g(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = -2;
  for (std::size_t i = 1; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
  g[0][3] = g[3][0] = 1;
  return g;
}

IntMatrix reflection_matrix(const IntMatrix& gram, std::size_t k) {
  IntMatrix r = identity_matrix(gram.size());
  for (std::size_t j = 0; j < gram.size(); ++j) r[k][j] += gram[k][j];
  return r;
}

CoxeterSystem coxeter_system(unsigned long n) {
  if (n < 10) throw PreconditionError("coxeter_system: n must be at least 10");
  CoxeterSystem cs;
  cs.n = n;
  cs.gram = gram_matrix(n);
  IntMatrix w = identity_matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    cs.reflections.push_back(reflection_matrix(cs.gram, k));
    // R_k differs from the identity in row k only
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i][k] == 0) continue;
      mpz_class wik = w[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) w[i][j] += wik * cs.gram[k][j];
      }
      w[i][k] = wik * (1 + cs.gram[k][k]);
    }
  }
  cs.coxeter_matrix = std::move(w);
  return cs;
}

IntPoly charpoly(const IntMatrix& a) {
  std::size_t n = a.size();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix m = identity_matrix(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = matmul(a, m);
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    if (mpz_divisible_ui_p(tr.get_mpz_t(), k) == 0) throw ConsistencyError("charpoly: non-integral trace quotient");
    mpz_class ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -ck;
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k];
    m = std::move(am);
  }
  return IntPoly(std::move(c));
}

IntPoly en_from_formula(unsigned long n) {
  if (n < 10) throw PreconditionError("en_from_formula: n must be at least 10");
  // x^(n-2)(x^3 - x - 1) + (x^3 + x^2 - 1)
  std::vector<mpz_class> rhs(n + 2, 0);
  rhs[n + 1] += 1;
  rhs[n - 1] -= 1;
  rhs[n - 2] -= 1;
  rhs[3] += 1;
  rhs[2] += 1;
  rhs[0] -= 1;
  DivMod qr = divmod(IntPoly(std::move(rhs)), IntPoly{-1, 1});
  if (!qr.remainder.is_zero()) throw ConsistencyError("en_from_formula: division by x-1 left a remainder");
  if (qr.quotient.deg() != n) throw ConsistencyError("en_from_formula: wrong degree");
  return qr.quotient;
}

IntPoly en_from_matrix(unsigned long n) { return charpoly(coxeter_system(n).coxeter_matrix); }

std::vector<unsigned long> totients(unsigned long limit) {
  std::vector<unsigned long> phi(limit + 1);
  for (unsigned long i = 0; i <= limit; ++i) phi[i] = i;
  for (unsigned long p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (unsigned long m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    out.push_back(q);
    while (d % q == 0) d /= q;
  }
  if (d > 1) out.push_back(d);
  return out;
}

}  // namespace

bool cyclotomic_excluded(const IntPoly& f, unsigned long d) {
  if (d == 0) throw PreconditionError("cyclotomic_excluded: order must be positive");
  const std::uint64_t top = (1ULL << 62) - 1;
  std::uint64_t t = top / d;
  std::uint64_t p = 0;
  for (; t > 0; --t) {
    std::uint64_t cand = t * d + 1;
    if (is_prime_u64(cand)) {
      p = cand;
      break;
    }
  }
  if (p == 0) return false;
  auto qs = prime_factors(d);
  std::uint64_t w = 0;
  for (std::uint64_t g = 2; g < 1000; ++g) {
    std::uint64_t c = powmod(g, (p - 1) / d, p);
    bool primitive = c != 0;
    for (auto q : qs) {
      if (powmod(c, d / q, p) == 1) primitive = false;
    }
    if (primitive) {
      w = c;
      break;
    }
  }
  if (w == 0) return false;
  std::uint64_t acc = 0;
  const auto& cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    std::uint64_t ci = mpz_fdiv_ui(cs[i].get_mpz_t(), p);
    acc = mulmod(acc, w, p) + ci;
    if (acc >= p) acc -= p;
  }
  return acc != 0;
}

namespace {

// Divides Phi_d out of f as often as possible; returns the multiplicity.
int strip(IntPoly& f, unsigned long d) {
  int mult = 0;
  std::optional<IntPoly> phi_d;
  while (f.deg() > 0 && !cyclotomic_excluded(f, d)) {
    if (!phi_d) phi_d = cyclotomic(d);
    DivMod qr = divmod(f, *phi_d);
    if (!qr.remainder.is_zero()) break;
    f = std::move(qr.quotient);
    ++mult;
  }
  return mult;
}

void check_structure(const SalemFactorization& sf) {
  const IntPoly& phi = sf.salem_candidate;
  if (!phi.is_monic() || !is_reciprocal(phi) || phi.deg() % 2 != 0) {
    throw ConsistencyError("salem_factor: Salem candidate of degree " + std::to_string(phi.deg()) +
                           " is not monic, reciprocal and even");
  }
  if (sf.cyclotomic_product() * phi != sf.e_n) throw ConsistencyError("salem_factor: factorization does not reconstruct E_n");
}

SalemFactorization factor_full(const IntPoly& e_n, unsigned long n) {
  SalemFactorization sf;
  sf.n = n;
  sf.e_n = e_n;
  sf.residue_class = n % 360;
  IntPoly f = e_n;
  unsigned long deg0 = f.deg();
  unsigned long limit = 4 * deg0 * deg0;
  auto tot = totients(limit);
  for (unsigned long d = 1; d <= limit; ++d) {
    if (tot[d] > f.deg()) continue;
    int m = strip(f, d);
    if (m > 0) sf.cyclotomic_part.push_back({d, m});
  }
  sf.search_limit = limit;
  sf.salem_candidate = std::move(f);
  return sf;
}

}  // namespace

IntPoly SalemFactorization::cyclotomic_product() const {
  IntPoly c{1};
  for (const auto& [d, m] : cyclotomic_part) {
    IntPoly phi_d = cyclotomic(d);
    for (int i = 0; i < m; ++i) c = c * phi_d;
  }
  return c;
}

std::vector<unsigned long> SalemFactorization::orders() const {
  std::vector<unsigned long> out;
  for (const auto& cf : cyclotomic_part) out.push_back(cf.d);
  return out;
}

SalemFactorization salem_factor(const IntPoly& e_n, unsigned long n, unsigned long cap) {
  if (n < 10) throw PreconditionError("salem_factor: n must be at least 10");
  if (e_n != en_from_formula(n)) throw PreconditionError("salem_factor: input is not E_" + std::to_string(n));
  SalemFactorization sf;
  if (e_n.deg() <= kFastPathDegree) {
    sf = factor_full(e_n, n);
  } else {
    unsigned long n0 = n % 360;
    if (n0 < 10) n0 += 360;
    SalemFactorization base = factor_full(en_from_formula(n0), n0);
    sf.n = n;
    sf.e_n = e_n;
    sf.residue_class = n % 360;
    sf.fast_path = true;
    IntPoly f = e_n;
    for (const auto& [d, m] : base.cyclotomic_part) {
      IntPoly phi_d = cyclotomic(d);
      for (int i = 0; i < m; ++i) {
        DivMod qr = divmod(f, phi_d);
        if (!qr.remainder.is_zero())
          throw ConsistencyError("salem_factor: Phi_" + std::to_string(d) + " of the residue class does not divide E_" +
                                 std::to_string(n));
        f = std::move(qr.quotient);
      }
    }
    sf.cyclotomic_part = base.cyclotomic_part;
    auto tot = totients(cap);
    for (unsigned long d = 1; d <= cap; ++d) {
      if (tot[d] > f.deg()) continue;
      int extra = strip(f, d);
      if (extra == 0) continue;
      auto it = std::find_if(sf.cyclotomic_part.begin(), sf.cyclotomic_part.end(),
                             [d](const CyclotomicFactor& c) { return c.d == d; });
      if (it == sf.cyclotomic_part.end()) {
        sf.cyclotomic_part.push_back({d, extra});
      } else {
        it->multiplicity += extra;
      }
    }
    std::sort(sf.cyclotomic_part.begin(), sf.cyclotomic_part.end(),
              [](const CyclotomicFactor& a, const CyclotomicFactor& b) { return a.d < b.d; });
    sf.search_limit = cap;
    sf.salem_candidate = std::move(f);
  }
  sf.note = "irreducibility of the Salem candidate is not verified symbolically; its Salem root pattern is certified separately";
  check_structure(sf);
  return sf;
}

SalemFactorization salem_factor(unsigned long n, unsigned long cap) { return salem_factor(en_from_formula(n), n, cap); }

IntPoly salem_trace(const IntPoly& phi) {
  if (phi.is_zero() || !phi.is_monic() || !is_reciprocal(phi) || phi.deg() % 2 != 0)
    throw PreconditionError("salem_trace: input must be monic, reciprocal and of even degree");
  const std::size_t m = phi.deg() / 2;
  std::vector<mpz_class> rest = phi.coeffs();
  std::vector<mpz_class> r(m + 1);
  std::vector<mpz_class> binom;
  // x^m (x + 1/x)^i = x^(m-i) (x^2 + 1)^i spans degrees m-i .. m+i
  for (std::size_t i = m + 1; i-- > 0;) {
    r[i] = rest[m + i];
    if (r[i] == 0) continue;
    binom.assign(1, 1);
    for (std::size_t j = 1; j <= i; ++j) {
      // C(i, j) = C(i, j-1) (i-j+1) / j
      mpz_class b = binom.back() * static_cast<unsigned long>(i - j + 1);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), j);
      binom.push_back(std::move(b));
    }
    for (std::size_t j = 0; j <= i; ++j) rest[m - i + 2 * j] -= r[i] * binom[j];
  }
  for (const auto& v : rest) {
    if (v != 0) throw PreconditionError("salem_trace: input has no trace polynomial");
  }
  IntPoly result(r);
  // H_m = r_m, H_k = (x^2+1) H_{k+1} + r_k x^(m-k), H_0 = x^m r(x + 1/x)
  std::vector<mpz_class> h{r[m]};
  for (std::size_t k = m; k-- > 0;) {
    std::vector<mpz_class> nh(h.size() + 2, 0);
    for (std::size_t j = 0; j < h.size(); ++j) {
      nh[j] += h[j];
      nh[j + 2] += h[j];
    }
    if (nh.size() <= m - k) nh.resize(m - k + 1, 0);
    nh[m - k] += r[k];
    h = std::move(nh);
  }
  if (IntPoly(std::move(h)) != phi) throw ConsistencyError("salem_trace: expansion check failed");
  return result;
}

nlohmann::json to_json(const SalemFactorization& f) {
  nlohmann::json cp = nlohmann::json::array();
  for (const auto& c : f.cyclotomic_part) cp.push_back({{"d", c.d}, {"multiplicity", c.multiplicity}});
  return {{"n", f.n},
          {"e_n", to_json(f.e_n)},
          {"cyclotomic_part", cp},
          {"salem_candidate", to_json(f.salem_candidate)},
          {"salem_degree", f.salem_candidate.deg()},
          {"residue_class", f.residue_class},
          {"fast_path", f.fast_path},
          {"search_limit", f.search_limit},
          {"note", f.note}};
}

}  // namespace salemforge
