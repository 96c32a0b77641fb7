#include "salemforge/mcmullen.hpp"

#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/report.hpp"

namespace salemforge {

std::string to_string(BranchClass c) { return c == BranchClass::siegel ? "siegel" : "non_siegel"; }

namespace {

ComplexBall cst(long v, Bits p) { return ComplexBall::exact(v, 0, p); }

// delta is already known to be a certified root of phi
std::vector<Branch> branches_of_root(const CertifiedRoot& delta, Bits precision_bits) {
  if (delta.tag != RootTag::on_circle) throw PreconditionError("eigenvalue_branches: delta is not certified on the unit circle");
  const ComplexBall& d = delta.value;
  Bits p = std::max(precision_bits, d.precision());
  ComplexBall den = cst(1, p) + d + d * d;
  if (den.contains_zero()) throw PoleError("eigenvalue_branches: 1 + delta + delta^2 may vanish");
  ComplexBall base = d * (cst(1, p) + d) / den;
  ComplexBall half = ComplexBall::from_real(RealBall::rational(1, 2, p));
  std::vector<Branch> out;
  for (int sign : {1, -1}) {
    Branch b;
    b.sign = sign;
    b.s = sign > 0 ? base : -base;
    ComplexBall s2 = b.s * b.s;
    ComplexBall root = sqrt(s2 - cst(4, p) * d);
    b.alpha = (b.s + root) * half;
    b.beta = (b.s - root) * half;
    b.a_of_delta = -(s2 - cst(2, p) * d);
    ComplexBall c2 = s2 / d;
    if (!c2.imag_part().contains_zero()) throw ConsistencyError("eigenvalue_branches: s^2/delta is not real");
    b.c2 = c2.real_part();
    RealBall four = RealBall::exact(4, p);
    if ((four - b.c2).is_positive()) {
      b.cls = BranchClass::siegel;
    } else if ((b.c2 - four).is_positive()) {
      b.cls = BranchClass::non_siegel;
    } else {
      throw PrecisionError("eigenvalue_branches: cannot separate s^2/delta from 4", 2 * p);
    }
    b.alpha_circle = unit_circle_distance(b.alpha);
    b.beta_circle = unit_circle_distance(b.beta);
    b.ratio_gap = abs(b.alpha / b.beta) - RealBall::exact(1, p);
    if (b.cls == BranchClass::siegel) {
      if (!b.alpha_circle.contains_zero() || !b.beta_circle.contains_zero())
        throw ConsistencyError("eigenvalue_branches: Siegel branch with a root off the circle");
    } else if (b.ratio_gap.contains_zero()) {
      throw PrecisionError("eigenvalue_branches: |alpha/beta| not separated from 1", 2 * p);
    }
    ComplexBall dd = d * d;
    b.vieta_product = b.alpha * b.beta - d;
    b.vieta_sum = b.alpha + b.beta - b.s;
    ComplexBall a2 = b.alpha * b.alpha, bb2 = b.beta * b.beta;
    b.quad_alpha = a2 * a2 + b.a_of_delta * a2 + dd;
    b.quad_beta = bb2 * bb2 + b.a_of_delta * bb2 + dd;
    for (const ComplexBall* r : {&b.vieta_product, &b.vieta_sum, &b.quad_alpha, &b.quad_beta}) {
      if (!r->contains_zero()) throw ConsistencyError("eigenvalue_branches: Vieta or quadratic residual excludes 0");
    }
    out.push_back(std::move(b));
  }
  if (out[0].cls != out[1].cls) throw ConsistencyError("eigenvalue_branches: classification depends on the branch sign");
  return out;
}

}  // namespace

std::vector<Branch> eigenvalue_branches(const IntPoly& phi, const CertifiedRoot& delta, Bits precision_bits) {
  if (!eval(phi, delta.value).contains_zero()) throw PreconditionError("eigenvalue_branches: delta is not a root of phi");
  return branches_of_root(delta, precision_bits);
}

SiegelScan scan_siegel_roots(const RootSet& rs, Bits precision_bits) {
  SiegelScan scan;
  scan.salem = classify_salem(rs);
  scan.roots = rs;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (rs.roots[i].tag != RootTag::on_circle) continue;
    CircleRootData c;
    c.root_index = i;
    c.delta = rs.roots[i];
    c.branches = branches_of_root(c.delta, precision_bits);
    c.cls = c.branches.front().cls;
    (c.cls == BranchClass::siegel ? scan.siegel : scan.nonsiegel).push_back(scan.circle.size());
    scan.circle.push_back(std::move(c));
  }
  if (scan.siegel.empty()) throw NoSiegelRootError("scan_siegel_roots: no unit-circle root gives a Siegel branch");
  return scan;
}

SiegelScan scan_siegel_roots(const IntPoly& phi, Bits precision_bits) {
  return scan_siegel_roots(isolate_roots(phi, precision_bits), precision_bits);
}

bool IntegralityCertificate::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

IntegralityCertificate integrality_certificate(unsigned long n) {
  IntegralityCertificate cert;
  cert.n = n;
  IntPoly e = en_from_formula(n);
  IntPoly lhs = e * IntPoly{-1, 1};
  DivMod q1 = divmod(lhs, IntPoly{1, 1, 1});
  cert.a_poly = q1.quotient;
  cert.remainder1 = q1.remainder;
  IntPoly expected{-2, -1};
  cert.checks.push_back({"E_n(x)(x-1) = (x^2+x+1)A(x) - (x+2)", cert.remainder1 == expected});
  DivMod q2 = divmod(e, IntPoly{2, 1});
  cert.c_poly = q2.quotient;
  cert.a_at_minus2 = eval_int(cert.a_poly, -2);
  mpz_class e_at_minus2 = eval_int(e, -2);
  cert.checks.push_back({"A(-2) = -E_n(-2)", cert.a_at_minus2 == -e_at_minus2});
  cert.checks.push_back({"E_n(x) = (x+2)C(x) - A(-2)", q2.remainder == IntPoly::constant(-cert.a_at_minus2)});
  cert.checks.push_back({"reconstruction (x^2+x+1)A + remainder1 = E_n(x)(x-1)",
                         IntPoly{1, 1, 1} * cert.a_poly + cert.remainder1 == lhs});
  return cert;
}

RealBall numeric_integrality_check(const IntegralityCertificate& cert, const ComplexBall& delta) {
  Bits p = delta.precision();
  ComplexBall lhs = eval(cert.a_poly, delta) / (delta + cst(2, p));
  ComplexBall rhs = inverse(delta * delta + delta + cst(1, p));
  return abs(lhs - rhs);
}

const Branch& McMullenPairData::branch() const {
  for (const auto& b : scan.circle[delta_circle_index].branches) {
    if (b.sign == branch_sign) return b;
  }
  throw ConsistencyError("McMullenPairData: branch sign not present");
}

const Branch* McMullenPairData::delta_prime_branch() const {
  if (!delta_prime_circle_index) return nullptr;
  return &scan.circle[*delta_prime_circle_index].branches.front();
}

McMullenPairData mcmullen_data(unsigned long n, Bits precision_bits) {
  if (n < 13 || n % 6 != 1) throw PreconditionError("mcmullen_data: n must satisfy n = 1 mod 6 and n >= 13");
  McMullenPairData d;
  d.n = n;
  d.precision_bits = precision_bits;
  d.factorization = salem_factor(n);
  const IntPoly& phi = d.factorization.salem_candidate;
  d.trace_poly = salem_trace(phi);
  RootSet rs = isolate_coxeter_salem_roots(n, phi, d.factorization.orders(), precision_bits);
  d.scan = scan_siegel_roots(rs, precision_bits);
  d.delta_circle_index = d.scan.siegel.front();
  d.branch_sign = 1;
  if (!d.scan.nonsiegel.empty()) d.delta_prime_circle_index = d.scan.nonsiegel.front();
  d.certificate = integrality_certificate(n);
  if (!d.certificate.passed()) throw ConsistencyError("mcmullen_data: integrality certificate failed for n = " + std::to_string(n));
  d.integrality_residual = numeric_integrality_check(d.certificate, d.delta().value);
  if (!d.integrality_residual.contains_zero() ||
      cmp(d.integrality_residual.rad(), rad_pow2(-static_cast<long>(precision_bits) / 2)) > 0)
    throw ConsistencyError("mcmullen_data: numeric integrality residual does not certify 0");
  d.entropy = log(d.scan.salem.eta);
  d.note =
      "which unit-circle root and branch sign the geometric automorphism realizes is not determined; the first Siegel "
      "root in argument order with branch +1 is reported. Geometric realizability for this n is assumed, not checked.";
  return d;
}

nlohmann::json to_json(const Branch& b) {
  return {{"sign", b.sign},
          {"class", to_string(b.cls)},
          {"s", ball_json(b.s)},
          {"alpha", ball_json(b.alpha)},
          {"beta", ball_json(b.beta)},
          {"a_of_delta", ball_json(b.a_of_delta)},
          {"s2_over_delta", ball_json(b.c2)},
          {"alpha_circle_distance", ball_json(b.alpha_circle)},
          {"beta_circle_distance", ball_json(b.beta_circle)},
          {"ratio_modulus_minus_1", ball_json(b.ratio_gap)},
          {"residuals",
           {{"alpha_beta_minus_delta", ball_json(b.vieta_product)},
            {"alpha_plus_beta_minus_s", ball_json(b.vieta_sum)},
            {"quadratic_alpha", ball_json(b.quad_alpha)},
            {"quadratic_beta", ball_json(b.quad_beta)}}}};
}

nlohmann::json to_json(const IntegralityCertificate& c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}});
  return {{"n", c.n},
          {"a_poly", to_json(c.a_poly)},
          {"remainder1", to_json(c.remainder1)},
          {"c_poly", to_json(c.c_poly)},
          {"a_at_minus2", c.a_at_minus2.get_str()},
          {"checks", checks},
          {"passed", c.passed()}};
}

nlohmann::json to_json(const McMullenPairData& d, bool full) {
  const auto& chosen = d.scan.circle[d.delta_circle_index];
  nlohmann::json fac = to_json(d.factorization);
  fac.erase("e_n");
  nlohmann::json j{{"n", d.n},
                   {"precision_bits", d.precision_bits},
                   {"factorization", fac},
                   {"trace_poly", to_json(d.trace_poly)},
                   {"eta", ball_json(d.scan.salem.eta)},
                   {"entropy", ball_json(d.entropy)},
                   {"circle_roots", d.scan.circle.size()},
                   {"siegel_roots", d.scan.siegel.size()},
                   {"nonsiegel_roots", d.scan.nonsiegel.size()},
                   {"delta", {{"root_index", chosen.root_index}, {"value", ball_json(chosen.delta.value)}}},
                   {"branch_sign", d.branch_sign},
                   {"branch", to_json(d.branch())},
                   {"siegel_root", d.siegel_root()},
                   {"integrality_certificate", to_json(d.certificate)},
                   {"integrality_residual", ball_json(d.integrality_residual)},
                   {"note", d.note}};
  if (const Branch* bp = d.delta_prime_branch()) {
    const auto& c = d.scan.circle[*d.delta_prime_circle_index];
    j["delta_prime"] = {{"root_index", c.root_index}, {"value", ball_json(c.delta.value)}, {"branch", to_json(*bp)}};
  }
  if (full) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& c : d.scan.circle) {
      nlohmann::json br = nlohmann::json::array();
      for (const auto& b : c.branches) br.push_back(to_json(b));
      all.push_back({{"root_index", c.root_index}, {"delta", ball_json(c.delta.value)}, {"class", to_string(c.cls)}, {"branches", br}});
    }
    j["all_circle_roots"] = all;
  }
  return j;
}

}  // namespace salemforge
