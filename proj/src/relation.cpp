#include "salemforge/relation.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "salemforge/lattice.hpp"
#include "salemforge/report.hpp"

namespace salemforge {

std::string to_string(RelationOutcome o) {
  switch (o) {
    case RelationOutcome::NoRelationFound: return "NoRelationFound";
    case RelationOutcome::Candidate: return "Candidate";
    case RelationOutcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

RealBall relation_residual(const std::vector<RealBall>& arguments, const std::vector<long>& m) {
  Bits prec = 64;
  for (const auto& a : arguments) prec = std::max(prec, a.precision());
  RealBall s(prec);
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (m[i] != 0) s = s + RealBall::exact(m[i], prec) * arguments[i];
  }
  return dist_to_integer(s);
}

namespace {

const char* kNote =
    "numeric falsification evidence, not a proof of multiplicative independence; "
    "NoRelationFound certifies |sum m_i theta_i - N| >= gap for all 0 < max|m_i| <= bound given the argument balls";

// round(2^P * mid) as an integer
mpz_class scaled(const RealBall& x, Bits P) {
  mpfr_t t;
  mpfr_init2(t, x.precision() + P + 8);
  mpfr_mul_2si(t, x.mid().get(), P, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

void check_radii(const std::vector<RealBall>& args, Bits P) {
  Real lim = rad_pow2(-static_cast<long>(P));
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (cmp(args[i].rad(), lim) > 0) {
      long have = args[i].rad().is_zero() ? 0 : -mpfr_get_exp(args[i].rad().get()) + 1;
      throw PrecisionTooLow("relation_search: argument " + std::to_string(i) + " is known to about " +
                                std::to_string(have) + " bits; at least " + std::to_string(P) + " are required",
                            static_cast<long>(P));
    }
  }
}

}  // namespace

RelationReport relation_search(const ArgumentProvider& provider, long bound, Bits P, long lll_num, long lll_den) {
  if (bound < 1) throw PreconditionError("relation_search: bound must be positive");
  if (P < 32) throw PreconditionError("relation_search: precision must be at least 32 bits");
  RelationReport rep;
  rep.bound = bound;
  rep.precision_bits = P;
  rep.note = kNote;
  rep.arguments = provider(P);
  const std::size_t k = rep.arguments.size();
  Bits wp = P + 64;
  rep.gap = RealBall(wp);
  if (k == 0) {
    rep.outcome = RelationOutcome::NoRelationFound;
    return rep;
  }
  check_radii(rep.arguments, P);

  mpz_class scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(P);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector r(k + 1, 0);
    r[i] = 1;
    r[k] = scaled(rep.arguments[i], P);
    rows.push_back(std::move(r));
  }
  IntVector last(k + 1, 0);
  last[k] = scale;
  rows.push_back(std::move(last));
  LllResult red = lll_reduce(std::move(rows), lll_num, lll_den);

  // candidates among the reduced vectors
  std::vector<RealBall> fine;
  bool fine_ready = false;
  Real loose = rad_pow2(-static_cast<long>(P) / 4);
  Real tight = rad_pow2(-3 * static_cast<long>(P) / 2);
  std::vector<long> best;
  RealBall best_res, best_ver;
  double best_norm = INFINITY;
  for (const auto& v : red.basis) {
    std::vector<long> m(k);
    bool small = true, nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (abs(v[i]) > bound) {
        small = false;
        break;
      }
      m[i] = v[i].get_si();
      nonzero = nonzero || m[i] != 0;
    }
    if (!small || !nonzero) continue;
    RealBall res = relation_residual(rep.arguments, m);
    if (cmp(res.upper(), loose) >= 0) continue;
    if (!fine_ready) {
      fine = provider(2 * P);
      if (fine.size() != k) throw ConsistencyError("relation_search: provider changed the argument count");
      fine_ready = true;
    }
    RealBall ver = relation_residual(fine, m);
    if (!ver.contains_zero() || cmp(ver.upper(), tight) >= 0) {
      ++rep.discarded_candidates;
      continue;
    }
    auto first = std::find_if(m.begin(), m.end(), [](long x) { return x != 0; });
    if (*first < 0)
      for (auto& x : m) x = -x;
    double norm = 0;
    for (long x : m) norm += static_cast<double>(x) * static_cast<double>(x);
    if (norm < best_norm) {
      best_norm = norm;
      best = m;
      best_res = res;
      best_ver = ver;
    }
  }
  if (!best.empty()) {
    rep.outcome = RelationOutcome::Candidate;
    rep.exponents = best;
    rep.residual = best_res;
    rep.verified_residual = best_ver;
    return rep;
  }

  // certified gap: every lattice vector has norm >= min_j |b*_j|
  Real lam2(wp);
  bool have = false;
  for (std::size_t j = 1; j < red.d.size(); ++j) {
    Real q(wp), nu(red.d[j], wp, MPFR_RNDD), de(red.d[j - 1], wp, MPFR_RNDU);
    mpfr_div(q.get(), nu.get(), de.get(), MPFR_RNDD);
    if (!have || cmp(q, lam2) < 0) {
      lam2 = q;
      have = true;
    }
  }
  Real maxrad = rad_zero();
  for (const auto& a : rep.arguments) {
    if (cmp(a.rad(), maxrad) > 0) maxrad = a.rad();
  }
  // g = (sqrt(lam2 - k B^2) - k B (1/2 + 2^P rad)) / 2^P
  const double kb = static_cast<double>(k) * static_cast<double>(bound);
  Real t(wp);
  mpfr_sub_d(t.get(), lam2.get(), kb * static_cast<double>(bound), MPFR_RNDD);
  if (t.sign() <= 0) {
    rep.outcome = RelationOutcome::Inconclusive;
    return rep;
  }
  mpfr_sqrt(t.get(), t.get(), MPFR_RNDD);
  Real err(wp);
  mpfr_mul_2si(err.get(), maxrad.get(), P, MPFR_RNDU);
  mpfr_add_d(err.get(), err.get(), 0.5, MPFR_RNDU);
  mpfr_mul_d(err.get(), err.get(), kb, MPFR_RNDU);
  mpfr_sub(t.get(), t.get(), err.get(), MPFR_RNDD);
  mpfr_div_2si(t.get(), t.get(), P, MPFR_RNDD);
  if (t.sign() <= 0) {
    rep.outcome = RelationOutcome::Inconclusive;
    return rep;
  }
  rep.gap = RealBall(t, rad_zero());
  rep.outcome = RelationOutcome::NoRelationFound;
  return rep;
}

RelationReport relation_search(const std::vector<RealBall>& arguments, long bound, Bits precision_bits) {
  return relation_search([&arguments](Bits) { return arguments; }, bound, precision_bits);
}

nlohmann::json to_json(const RelationReport& r) {
  nlohmann::json args = nlohmann::json::array();
  for (const auto& a : r.arguments) args.push_back(ball_json(a));
  nlohmann::json j{{"arguments", args},
                   {"bound", r.bound},
                   {"precision_bits", r.precision_bits},
                   {"outcome", to_string(r.outcome)},
                   {"discarded_candidates", r.discarded_candidates},
                   {"note", r.note}};
  if (r.outcome == RelationOutcome::Candidate) {
    j["exponents"] = r.exponents;
    j["residual"] = ball_json(r.residual);
    j["verified_residual"] = ball_json(r.verified_residual);
  }
  if (r.outcome == RelationOutcome::NoRelationFound) j["gap"] = ball_json(r.gap);
  return j;
}

}  // namespace salemforge
