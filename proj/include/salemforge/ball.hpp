#pragma once

// MPFR-backed reals and mid-radius balls.
//
// A ball (mid, rad) asserts that the true value lies within distance rad of
// mid. Midpoints are computed round-to-nearest at the working precision; every
// rounding error is bounded a priori and added into rad, which is itself kept
// at low precision and rounded upward.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "salemforge/polyring.hpp"

namespace salemforge {

using Bits = mpfr_prec_t;

class Real {
 public:
  explicit Real(Bits prec = 64);
  Real(double v, Bits prec);
  Real(const mpz_class& z, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  // Decimal or scientific literal.
  Real(const std::string& s, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  Bits precision() const noexcept { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  // Scientific notation with `digits` significant digits.
  std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t v_;
};

// Low-precision upper/lower bound helpers used for radii.
inline constexpr Bits kRadiusBits = 32;
Real rad_zero();
Real rad_from_double(double v);
// 2^e as a radius value.
Real rad_pow2(long e);
// Upper bound of |x|.
Real abs_upper(const Real& x);
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);
Real div_up(const Real& a, const Real& b);
Real sub_down(const Real& a, const Real& b);
int cmp(const Real& a, const Real& b);
// Number of correct decimal digits to print for a precision.
int decimal_digits(Bits prec);

class RealBall {
 public:
  RealBall() : mid_(64), rad_(rad_zero()) {}
  explicit RealBall(Bits prec);
  RealBall(Real mid, Real rad);
  static RealBall exact(const mpz_class& z, Bits prec);
  static RealBall from_double(double v, Bits prec);
  // Ball around the rational a/b.
  static RealBall rational(long a, long b, Bits prec);
  static RealBall from_interval(const Real& lo, const Real& hi, Bits prec);

  const Real& mid() const noexcept { return mid_; }
  const Real& rad() const noexcept { return rad_; }
  Bits precision() const noexcept { return mid_.precision(); }

  Real lower() const;
  Real upper() const;
  bool contains_zero() const;
  bool is_positive() const;
  bool is_negative() const;
  // Certified sign: +1, -1, or 0 when the ball contains zero.
  int certified_sign() const;
  bool contains(const Real& x) const;
  bool overlaps(const RealBall& o) const;

  void add_error(const Real& e);

 private:
  Real mid_;
  Real rad_;
};

RealBall operator+(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a);
RealBall operator*(const RealBall& a, const RealBall& b);
RealBall operator/(const RealBall& a, const RealBall& b);
RealBall log(const RealBall& x);
RealBall sqrt(const RealBall& x);
// Fractional part in [0, 1) of the midpoint; radius unchanged.
RealBall frac(const RealBall& x);
// Distance of x to the nearest integer, as a ball (mid >= 0).
RealBall dist_to_integer(const RealBall& x);
RealBall pi_ball(Bits prec);

struct Complex {
  Real re;
  Real im;
  explicit Complex(Bits prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Bits precision() const { return re.precision(); }
};

class ComplexBall {
 public:
  ComplexBall() : mid_(64), rad_(rad_zero()) {}
  explicit ComplexBall(Bits prec);
  ComplexBall(Complex mid, Real rad);
  ComplexBall(const RealBall& re, const RealBall& im);
  static ComplexBall from_real(const RealBall& x);
  static ComplexBall exact(const mpz_class& re, const mpz_class& im, Bits prec);
  // exp(2 pi i t) for a real ball t.
  static ComplexBall unit_from_turns(const RealBall& t);

  const Complex& mid() const noexcept { return mid_; }
  const Real& re() const noexcept { return mid_.re; }
  const Real& im() const noexcept { return mid_.im; }
  const Real& rad() const noexcept { return rad_; }
  Bits precision() const noexcept { return mid_.precision(); }

  RealBall real_part() const;
  RealBall imag_part() const;
  bool contains_zero() const;
  bool overlaps(const ComplexBall& o) const;
  // Euclidean distance of midpoints (approximate, for sorting only).
  double approx_abs() const;
  double approx_arg() const;

  ComplexBall conj() const;
  void add_error(const Real& e);
  ComplexBall with_precision(Bits prec) const;

 private:
  Complex mid_;
  Real rad_;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const RealBall& b);
ComplexBall inverse(const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall square(const ComplexBall& a);
ComplexBall pow(const ComplexBall& a, unsigned long k);
// A ball containing one square root w of every point of the input, chosen so
// that {w, -w} covers both roots of every point. Branch-cut free as a set.
ComplexBall sqrt(const ComplexBall& z);
RealBall abs(const ComplexBall& z);
// arg(z) / (2 pi) reduced to [0, 1).
RealBall turns(const ComplexBall& z);

// Horner evaluation of an integer polynomial at a ball.
ComplexBall eval(const IntPoly& p, const ComplexBall& z);
RealBall eval(const IntPoly& p, const RealBall& x);

// Decimal rendering for reports: midpoint digits follow the precision,
// radius is printed with a few digits rounded upward.
std::string mid_string(const Real& x);
std::string rad_string(const Real& r);

}  // namespace salemforge
