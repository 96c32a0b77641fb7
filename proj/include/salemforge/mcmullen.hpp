#pragma once

// Eigenvalue data of a McMullen pair at its Siegel fixed point and the exact
// integrality certificates for alpha + beta.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "salemforge/coxeter.hpp"
#include "salemforge/roots.hpp"

namespace salemforge {

enum class BranchClass { siegel, non_siegel };

std::string to_string(BranchClass c);

struct Branch {
  int sign = 1;
  ComplexBall s;           // alpha + beta = sign * delta (1 + delta) / (1 + delta + delta^2)
  ComplexBall alpha;
  ComplexBall beta;
  ComplexBall a_of_delta;  // -(s^2 - 2 delta)
  RealBall c2;             // s^2 / delta, real for |delta| = 1
  BranchClass cls = BranchClass::siegel;
  RealBall alpha_circle;   // |alpha| - 1
  RealBall beta_circle;    // |beta| - 1
  RealBall ratio_gap;      // |alpha / beta| - 1
  // residual balls; each must contain 0
  ComplexBall vieta_product;  // alpha beta - delta
  ComplexBall vieta_sum;      // alpha + beta - s
  ComplexBall quad_alpha;     // alpha^4 + a alpha^2 + delta^2
  ComplexBall quad_beta;
};

// Both branch signs for a certified unit-circle root delta of phi. Throws
// PoleError when 1 + delta + delta^2 may vanish and PrecisionError when the
// Siegel test c^2 < 4 versus c^2 > 4 cannot be decided.
std::vector<Branch> eigenvalue_branches(const IntPoly& phi, const CertifiedRoot& delta, Bits precision_bits);

struct CircleRootData {
  std::size_t root_index = 0;  // into the RootSet
  CertifiedRoot delta;
  std::vector<Branch> branches;
  BranchClass cls = BranchClass::siegel;
};

struct SiegelScan {
  RootSet roots;
  SalemCertificate salem;
  std::vector<CircleRootData> circle;
  std::vector<std::size_t> siegel;     // indices into `circle`
  std::vector<std::size_t> nonsiegel;
};

// Every on-circle root of a Salem-certified phi, partitioned by branch class.
// Throws NoSiegelRootError when no root is Siegel.
SiegelScan scan_siegel_roots(const RootSet& rs, Bits precision_bits);
SiegelScan scan_siegel_roots(const IntPoly& phi, Bits precision_bits);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct IntegralityCertificate {
  unsigned long n = 0;
  IntPoly a_poly;      // E_n(x)(x-1) = (x^2+x+1) A(x) + remainder1
  IntPoly remainder1;  // expected -(x+2)
  IntPoly c_poly;      // E_n(x) = (x+2) C(x) - A(-2)
  mpz_class a_at_minus2;
  std::vector<NamedCheck> checks;

  bool passed() const;
};

// Exact; never throws for n >= 10. For n = 1 mod 6 every check passes.
IntegralityCertificate integrality_certificate(unsigned long n);

// |A(delta)/(delta+2) - 1/(delta^2+delta+1)| as a ball.
RealBall numeric_integrality_check(const IntegralityCertificate& cert, const ComplexBall& delta);

struct McMullenPairData {
  unsigned long n = 0;
  SalemFactorization factorization;
  IntPoly trace_poly;
  SiegelScan scan;
  std::size_t delta_circle_index = 0;  // into scan.circle
  int branch_sign = 1;
  std::optional<std::size_t> delta_prime_circle_index;
  IntegralityCertificate certificate;
  RealBall integrality_residual;
  RealBall entropy;  // log eta
  Bits precision_bits = 0;
  std::string note;

  const CertifiedRoot& delta() const { return scan.circle[delta_circle_index].delta; }
  const Branch& branch() const;
  const Branch* delta_prime_branch() const;
  bool siegel_root() const { return branch().cls == BranchClass::siegel; }
};

// n = 1 mod 6, n >= 13. Roots come from the sparse Coxeter locator. The chosen
// delta is the first Siegel circle root in argument order, with branch +1;
// delta' is the first non-Siegel one.
McMullenPairData mcmullen_data(unsigned long n, Bits precision_bits);

nlohmann::json to_json(const Branch& b);
nlohmann::json to_json(const IntegralityCertificate& c);
// `full` adds both branches for every circle root.
nlohmann::json to_json(const McMullenPairData& d, bool full);

}  // namespace salemforge
