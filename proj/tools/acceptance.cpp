// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "salemforge/coxeter.hpp"
#include "salemforge/mau.hpp"
#include "salemforge/mcmullen.hpp"
#include "salemforge/polyring.hpp"
#include "salemforge/product.hpp"
#include "salemforge/relation.hpp"
#include "salemforge/roots.hpp"
#include "salemforge/toric.hpp"

using namespace salemforge;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note << "failed: " << what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<void(Outcome&)> run;
};

const MAUSequence& seq19() {
  static const MAUSequence s = mau_build_from(0, 4, 512);
  return s;
}

const MAUSequence& seq4() {
  static const MAUSequence s = mau_build(4, 512);
  return s;
}

ProductSpec s19_with(const std::string& fan, std::size_t entries) {
  return {{McMullenFactor{19}, ToricFactor{standard_fan(fan)}}, truncate(seq19(), entries)};
}

std::map<unsigned long, int> cyclotomic_multiset(const SalemFactorization& f) {
  std::map<unsigned long, int> m;
  for (const auto& c : f.cyclotomic_part) m[c.d] += c.multiplicity;
  return m;
}

bool reciprocal_pairing(const RootSet& rs) {
  for (const auto& r : rs.roots) {
    ComplexBall inv = inverse(r.value);
    std::size_t hits = 0;
    for (const auto& s : rs.roots)
      if (s.value.overlaps(inv)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

RealBall random_turn(gmp_randclass& rng, Bits bits, Bits prec) {
  return RealBall::exact(rng.get_z_bits(bits), prec) / RealBall::exact(mpz_class(1) << bits, prec);
}

bool proportional(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return std::any_of(a.begin(), a.end(), [](long x) { return x != 0; });
}

void c1(Outcome& o) {
  SalemFactorization f = salem_factor(19);
  o.require(f.cyclotomic_product() == IntPoly{1, 1} * IntPoly{1, 1, 1, 1, 1}, "cyclotomic part (x+1)(x^4+x^3+x^2+x+1)");
  o.require(f.cyclotomic_part.size() == 2, "two cyclotomic factors");
  IntPoly phi{1, -1, 0, -1, 1, 0, 0, -1, 0, 0, 1, -1, 0, -1, 1};
  o.require(f.salem_candidate == phi, "Salem factor x^14-x^13-x^11+x^10-x^7+x^4-x^3-x+1");
  o.require(f.cyclotomic_product() * f.salem_candidate == en_from_formula(19), "product equals E_19");
  o.note << "phi = " << f.salem_candidate.to_string();
}

void c2(Outcome& o) {
  for (unsigned long n = 10; n <= 30; ++n)
    o.require(en_from_matrix(n) == en_from_formula(n), "matrix route at n = " + std::to_string(n));
  o.note << "n = 10..30 agree";
}

void c3(Outcome& o) {
  auto a = cyclotomic_multiset(salem_factor(19));
  auto b = cyclotomic_multiset(salem_factor(379));
  o.require(a == b, "cyclotomic multisets of E_19 and E_379");
  o.note << "{";
  for (auto [d, m] : a) o.note << " (" << d << "," << m << ")";
  o.note << " }";
}

void c4(Outcome& o) {
  IntPoly phi = salem_factor(19).salem_candidate;
  RootSet rs = isolate_roots(phi, 256);
  SalemCertificate s = classify_salem(rs);
  o.require(rs.count(RootTag::real_gt_1) == 1, "one real root > 1");
  o.require(rs.count(RootTag::real_in_01) == 1, "one real root in (0,1)");
  o.require(rs.count(RootTag::on_circle) == 12 && s.circle_count == 12, "12 roots on the circle");
  o.require(rs.roots.size() == 14, "14 simple roots");
  RealBall one = RealBall::exact(mpz_class(1), 256);
  ComplexBall prod = rs.roots[s.eta_index].value * rs.roots[s.inverse_index].value;
  o.require(prod.overlaps(ComplexBall::from_real(one)), "eta times its reciprocal is 1");
  for (const auto& r : rs.roots) {
    if (r.tag != RootTag::on_circle) continue;
    std::size_t conj_hits = 0;
    for (const auto& t : rs.roots)
      if (t.value.overlaps(r.value.conj())) ++conj_hits;
    o.require(conj_hits == 1, "circle root pairs with its conjugate");
    o.require(unit_circle_distance(r.value).contains_zero(), "circle root has modulus 1");
  }
  o.require(reciprocal_pairing(rs), "reciprocal pairing");
  o.note << "eta = " << s.eta.mid().to_decimal(20);
}

void c5(Outcome& o) {
  for (unsigned long n : {19ul, 25ul, 31ul, 37ul, 43ul, 379ul, 739ul})
    o.require(integrality_certificate(n).passed(), "certificate at n = " + std::to_string(n));
  o.require(!integrality_certificate(20).passed(), "certificate fails at n = 20");
  o.note << "7 pass, n = 20 fails";
}

void c6(Outcome& o) {
  SiegelScan scan = scan_siegel_roots(salem_factor(19).salem_candidate, 256);
  auto small = [](const ComplexBall& r) { return r.contains_zero() && cmp(r.rad(), rad_pow2(-100)) < 0; };
  std::size_t branches = 0;
  for (const auto& c : scan.circle)
    for (const Branch& b : c.branches) {
      ++branches;
      o.require(small(b.vieta_product), "|alpha beta - delta| ball");
      o.require(small(b.vieta_sum), "|alpha + beta - s| ball");
      o.require(small(b.quad_alpha) && small(b.quad_beta), "quadratic residual balls");
    }
  o.require(!scan.siegel.empty(), "nonempty Siegel list");
  o.require(!scan.nonsiegel.empty(), "nonempty non-Siegel list");
  o.note << scan.circle.size() << " circle roots, " << branches << " branches, " << scan.siegel.size() << " Siegel, "
         << scan.nonsiegel.size() << " non-Siegel";
}

void c7(Outcome& o) {
  const MAUSequence& s = seq4();
  o.require(s.length() == 4, "length 4");
  o.require(!s.certificates.empty() && s.certificates[0].k == 2 && s.certificates[0].q == 367, "first k = 2, d(2) = 367");
  for (const auto& c : s.certificates) {
    o.require(c.primality.prime, "d(k) prime");
    o.require(c.deg_phi == 360 * c.k + 14, "deg phi = 360k+14");
    o.require(c.deg_r == 180 * c.k + 7, "deg r = 180k+7");
    o.require(c.q_exceeds_bound && mpz_class(static_cast<unsigned long>(c.q)) > c.degree_bound_before, "q > degree bound");
  }
  o.require(s.relation_audit.outcome == RelationOutcome::NoRelationFound, "joint audit NoRelationFound");
  o.note << "k =";
  for (const auto& c : s.certificates) o.note << " " << c.k;
  o.note << ", audit " << to_string(s.relation_audit.outcome);
}

void c8(Outcome& o) {
  std::vector<RealBall> rou{RealBall::rational(1, 3, 1024), RealBall::rational(1, 6, 1024)};
  RelationReport r = relation_search(rou, 32, 256);
  o.require(r.outcome == RelationOutcome::Candidate && proportional(r.exponents, {1, -2}), "(1/3, 1/6) gives (1, -2)");

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(12);
  std::mt19937_64 small(13);
  std::uniform_int_distribution<long> coef(-20, 20);
  const Bits P = 512, prec = 2 * P + 64;
  int planted = 0;
  for (int t = 0; t < 100; ++t) {
    std::size_t k = 2 + t % 4;
    std::vector<long> m(k);
    for (auto& x : m) x = coef(small);
    if (m[k - 1] == 0) m[k - 1] = 11;
    std::vector<RealBall> args;
    RealBall s(prec);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      args.push_back(random_turn(rng, prec - 8, prec));
      s = s + RealBall::exact(m[i], prec) * args.back();
    }
    long j = static_cast<long>(small() % 7);
    args.push_back(frac((RealBall::exact(j, prec) - s) / RealBall::exact(m[k - 1], prec)));
    RelationReport rr = relation_search(args, 32, P);
    long g = 0;
    for (long x : m) g = std::gcd(g, x);
    std::vector<long> prim;
    for (long x : m) prim.push_back(x / g);
    if (rr.outcome == RelationOutcome::Candidate && proportional(rr.exponents, prim)) ++planted;
  }
  o.require(planted == 100, "all planted relations recovered");

  int false_pos = 0, clean = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<RealBall> args;
    for (int i = 0; i < 2 + t % 4; ++i) args.push_back(random_turn(rng, prec - 8, prec));
    RelationReport rr = relation_search(args, 32, P);
    if (rr.outcome == RelationOutcome::Candidate) ++false_pos;
    if (rr.outcome == RelationOutcome::NoRelationFound) ++clean;
  }
  o.require(false_pos == 0, "no false positives");
  o.note << planted << "/100 planted, " << false_pos << " false positives, " << clean << "/100 NoRelationFound";
}

void c9(Outcome& o) {
  SiegelCount a = siegel_count(s19_with("plane", 4), 32, 512);
  o.require(a.reports.size() == 6 && a.count == 3 && a.nonsiegel == 3 && a.undetermined == 0, "S(19) x plane 6/3/3/0");
  SiegelCount b = siegel_count(s19_with("line", 3), 32, 512);
  o.require(b.reports.size() == 4 && b.count == 2, "S(19) x line 4/2");
  o.note << "plane " << a.reports.size() << " pts " << a.count << " Siegel " << a.nonsiegel << " non " << a.undetermined
         << " undet; line " << b.reports.size() << " pts " << b.count << " Siegel";
}

void c10(Outcome& o) {
  const MAUSequence& s = seq4();
  ProductSpec spec{{McMullenFactor{s.certificates.at(0).n}, McMullenFactor{s.certificates.at(1).n}}, s};
  SiegelCount c = siegel_count(spec, 32, 512);
  o.require(c.reports.size() == 4 && c.count == 1 && c.nonsiegel == 3, "4 points, 1 Siegel, 3 non-Siegel");
  for (const auto& r : c.reports) {
    bool all_q = std::all_of(r.point.address.begin(), r.point.address.end(),
                             [](const AddressPart& a) { return a.kind == AddressPart::Kind::Q; });
    o.require((r.classification == Classification::SiegelArithmetic) == all_q, "the all-Q address is the Siegel one");
  }
  o.note << "n = " << s.certificates[0].n << " x " << s.certificates[1].n << ": " << c.count << " Siegel";
}

void c11(Outcome& o) {
  ProductEntropy e = product_entropy(s19_with("plane", 4));
  EntropyValue direct = entropy_from_charpoly(en_from_formula(19) * IntPoly{-1, 1}, 256);
  SalemCertificate sc = classify_salem(isolate_roots(salem_factor(19).salem_candidate, 256));
  RealBall log_eta = log(sc.eta);
  Real tol = rad_pow2(-80);
  o.require(cmp(abs_upper((e.value - direct.value).mid()), tol) < 0, "product entropy vs charpoly entropy");
  o.require(cmp(abs_upper((e.value - log_eta).mid()), tol) < 0, "product entropy vs log eta");
  o.require(e.certified_positive && e.value.is_positive(), "certified positive");

  const MAUSequence& s = seq4();
  ProductSpec both{{McMullenFactor{s.certificates[0].n}, McMullenFactor{s.certificates[1].n}}, s};
  RealBall sum = mcmullen_data(s.certificates[0].n, 256).entropy + mcmullen_data(s.certificates[1].n, 256).entropy;
  o.require(product_entropy(both).value.overlaps(sum), "two-factor entropy is the sum of parts");
  o.note << "h = " << e.value.mid().to_decimal(20);
}

void c12(Outcome& o) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int t = 0; t < 200; ++t) {
    std::vector<mpz_class> a(1 + t % 12), b(1 + t % 5);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    b.back() = 1;
    IntPoly p(a), q(b);
    o.require(poly_from_json(nlohmann::json::parse(to_json(p).dump())) == p, "JSON round trip");
    DivMod dm = divmod(p, q);
    o.require(dm.quotient * q + dm.remainder == p, "division round trip");
    o.require((p * q) - (q * p) == IntPoly{}, "commutative product");
  }
  for (std::size_t d = 1; d <= 200; ++d) {
    IntPoly prod{1};
    for (unsigned long e = 1; e <= d; ++e)
      if (d % e == 0) prod = prod * cyclotomic(e);
    o.require(prod == x_pow_minus_one(d), "product of Phi_e over e | d is x^d - 1 at d = " + std::to_string(d));
  }
  for (unsigned long n : {10ul, 13ul, 19ul, 25ul, 31ul}) {
    o.require(reciprocal_pairing(isolate_roots(en_from_formula(n), 256)), "reciprocal pairing of E_" + std::to_string(n));
  }
  for (unsigned long n : {19ul, 25ul, 31ul}) {
    IntPoly phi = salem_factor(n).salem_candidate;
    std::vector<std::vector<RootTag>> tags;
    std::vector<std::vector<BranchClass>> classes;
    for (Bits p : {128u, 256u, 512u, 1024u}) {
      SiegelScan s = scan_siegel_roots(phi, p);
      std::vector<RootTag> tg;
      for (const auto& r : s.roots.roots) tg.push_back(r.tag);
      std::vector<BranchClass> cl;
      for (const auto& cr : s.circle) cl.push_back(cr.cls);
      tags.push_back(tg);
      classes.push_back(cl);
    }
    for (std::size_t i = 1; i < tags.size(); ++i) {
      o.require(tags[i] == tags[0], "root tags stable under precision at n = " + std::to_string(n));
      o.require(classes[i] == classes[0], "branch classes stable under precision at n = " + std::to_string(n));
    }
  }
  SiegelCount lo = siegel_count(s19_with("plane", 4), 32, 512);
  SiegelCount hi = siegel_count(s19_with("plane", 4), 32, 1024);
  for (std::size_t i = 0; i < lo.reports.size(); ++i)
    o.require(lo.reports[i].classification == hi.reports.at(i).classification, "product classes stable under precision");
  o.note << "round trips, Phi_e products d <= 200, pairing, precision monotonicity";
}

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "E_19 factorization", 1, c1},
      {2, "formula vs matrix route, n = 10..30", 30, c2},
      {3, "cyclotomic periodicity E_19 / E_379", 60, c3},
      {4, "Salem structure of phi_14", 0, c4},
      {5, "integrality certificates", 10, c5},
      {6, "branch consistency at n = 19", 0, c6},
      {7, "MAU pipeline mau_build(4, 512)", 120, c7},
      {8, "relation finder soundness", 0, c8},
      {9, "S(19) x plane and S(19) x line", 0, c9},
      {10, "two McMullen factors", 0, c10},
      {11, "entropy", 0, c11},
      {12, "property suites", 120, c12},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds && o.ok) {
      o.ok = false;
      o.note << " (over the " << c.limit_seconds << " s limit)";
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %-40s %7.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
