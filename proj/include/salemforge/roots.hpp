#pragma once

// Certified complex root isolation, Salem pattern certification and entropy.

#include <string>
#include <vector>

#include "salemforge/ball.hpp"
#include "salemforge/polyring.hpp"

namespace salemforge {

inline constexpr Bits kDefaultPrecision = 256;

enum class RootTag { outside_circle, inside_circle, on_circle, real_gt_1, real_in_01, undetermined };

std::string to_string(RootTag t);

struct CertifiedRoot {
  ComplexBall value;
  int multiplicity = 1;
  RootTag tag = RootTag::undetermined;
  bool real = false;  // certified real by conjugate pairing
};

struct RootSet {
  IntPoly poly;
  Bits precision_bits = kDefaultPrecision;
  // Sorted by argument in [0, 2 pi), then modulus.
  std::vector<CertifiedRoot> roots;

  std::size_t count(RootTag t) const;
};

// All complex roots of p as pairwise disjoint certified balls of radius at
// most 2^(-precision_bits/2). Square factors are split off first and
// multiplicities reattached. Throws PrecisionError if isolation fails.
RootSet isolate_roots(const IntPoly& p, Bits precision_bits);

struct SalemCertificate {
  RealBall eta;
  std::size_t eta_index = 0;
  std::size_t inverse_index = 0;
  std::size_t circle_count = 0;
  std::string note;
};

// Certifies: one root outside the unit circle, real and > 1; its reciprocal
// partner in (0, 1); every other root on the circle and simple.
// Throws NotSalemError naming the offending root.
SalemCertificate classify_salem(const RootSet& rs);

struct EntropyValue {
  RealBall value;
  bool exact_zero = false;
};

// log of the spectral radius of an integer matrix with characteristic
// polynomial p; exactly 0 when all roots are certified on or inside the
// unit circle.
EntropyValue entropy_from_charpoly(const IntPoly& p, Bits precision_bits);

// Certified |z| - 1.
RealBall unit_circle_distance(const ComplexBall& z);

// Roots of the Salem factor phi of the Coxeter polynomial E_n, located through
// the sparse identity E_n(x)(x-1) = x^(n-2)(x^3-x-1) + (x^3+x^2-1).
// `cyclotomic_orders` lists the d with Phi_d | E_n. Same output contract as
// isolate_roots; cost is near-linear in n.
RootSet isolate_coxeter_salem_roots(unsigned long n, const IntPoly& phi,
                                    const std::vector<unsigned long>& cyclotomic_orders, Bits precision_bits);

}  // namespace salemforge
