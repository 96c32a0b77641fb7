#pragma once

// Midpoint-only complex arithmetic for iterative solvers. No error tracking:
// results of these routines are always re-certified with balls afterwards.

#include <cmath>
#include <vector>

#include "salemforge/ball.hpp"

namespace salemforge::detail {

inline Complex cmake(double re, double im, Bits p) { return Complex(Real(re, p), Real(im, p)); }

inline Complex cset(const Complex& a, Bits p) {
  Complex r(p);
  mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
  return r;
}

inline Complex cadd(const Complex& a, const Complex& b) {
  Complex r(std::max(a.precision(), b.precision()));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

inline Complex csub(const Complex& a, const Complex& b) {
  Complex r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

inline Complex cmul(const Complex& a, const Complex& b) {
  Complex r(std::max(a.precision(), b.precision()));
  mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  return r;
}

inline Complex cscale(const Complex& a, long s) {
  Complex r(a.precision());
  mpfr_mul_si(r.re.get(), a.re.get(), s, MPFR_RNDN);
  mpfr_mul_si(r.im.get(), a.im.get(), s, MPFR_RNDN);
  return r;
}

inline Complex cdiv(const Complex& a, const Complex& b) {
  Bits p = std::max(a.precision(), b.precision());
  Real n(p);
  mpfr_fmma(n.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  Complex r(p);
  mpfr_fmma(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(r.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
  return r;
}

inline Complex cpow(const Complex& a, unsigned long k) {
  Complex result = cmake(1.0, 0.0, a.precision());
  Complex base = a;
  while (k > 0) {
    if (k & 1UL) result = cmul(result, base);
    k >>= 1U;
    if (k > 0) base = cmul(base, base);
  }
  return result;
}

// log2 |a|; -inf for zero.
inline double clog2abs(const Complex& a) {
  long er = 0, ei = 0;
  double mr = mpfr_zero_p(a.re.get()) ? 0.0 : mpfr_get_d_2exp(&er, a.re.get(), MPFR_RNDN);
  double mi = mpfr_zero_p(a.im.get()) ? 0.0 : mpfr_get_d_2exp(&ei, a.im.get(), MPFR_RNDN);
  if (mr == 0.0 && mi == 0.0) return -INFINITY;
  long e = std::max(mr != 0.0 ? er : ei, mi != 0.0 ? ei : er);
  double r = std::ldexp(mr, static_cast<int>(er - e));
  double i = std::ldexp(mi, static_cast<int>(ei - e));
  return static_cast<double>(e) + std::log2(std::hypot(r, i));
}

}  // namespace salemforge::detail
