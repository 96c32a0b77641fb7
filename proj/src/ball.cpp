#include "salemforge/ball.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "salemforge/errors.hpp"

namespace salemforge {

// ---------------------------------------------------------------- Real

Real::Real(Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& z, Bits prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, z.get_mpz_t(), rnd);
}

Real::Real(const std::string& s, Bits prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, s.c_str(), 10, rnd) != 0 && mpfr_nan_p(v_)) {
    mpfr_clear(v_);
    throw PreconditionError("malformed decimal: " + s);
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(v_)) return "0";
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, rnd),
                                           mpfr_free_str);
  std::string m(s.get());
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // strip trailing zeros of the mantissa, keep at least one digit
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

Real rad_zero() { return Real(kRadiusBits); }

Real rad_from_double(double v) {
  Real r(kRadiusBits);
  mpfr_set_d(r.get(), v, MPFR_RNDU);
  return r;
}

Real rad_pow2(long e) {
  Real r(kRadiusBits);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDU);
  return r;
}

Real abs_upper(const Real& x) {
  Real r(kRadiusBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

Real add_up(const Real& a, const Real& b) {
  Real r(kRadiusBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(kRadiusBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real div_up(const Real& a, const Real& b) {
  Real r(kRadiusBits);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real sub_down(const Real& a, const Real& b) {
  Real r(kRadiusBits);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }

int decimal_digits(Bits prec) { return static_cast<int>(std::floor(static_cast<double>(prec) * 0.30102999566398)) + 1; }

namespace {

// Relative rounding unit 2^-prec.
Real unit(Bits prec) { return rad_pow2(-static_cast<long>(prec)); }

// Upper bound of the rounding error committed when x was produced by one
// round-to-nearest operation at precision prec.
Real round_err(const Real& x, Bits prec) { return mul_up(abs_upper(x), unit(prec)); }

Real hypot_up(const Real& a, const Real& b) {
  Real r(kRadiusBits);
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real hypot_down(const Real& a, const Real& b) {
  Real r(kRadiusBits);
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

Real abs_down(const Real& x) {
  Real r(kRadiusBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDD);
  return r;
}

}  // namespace

// ---------------------------------------------------------------- RealBall

RealBall::RealBall(Bits prec) : mid_(prec), rad_(rad_zero()) {}

RealBall::RealBall(Real mid, Real rad) : mid_(std::move(mid)), rad_(rad_zero()) {
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

RealBall RealBall::exact(const mpz_class& z, Bits prec) {
  Real m(prec);
  int inexact = mpfr_set_z(m.get(), z.get_mpz_t(), MPFR_RNDN);
  RealBall b(std::move(m), rad_zero());
  if (inexact) b.add_error(round_err(b.mid(), prec));
  return b;
}

RealBall RealBall::from_double(double v, Bits prec) { return RealBall(Real(v, prec), rad_zero()); }

RealBall RealBall::rational(long a, long b, Bits prec) {
  Real m(prec);
  mpfr_set_si(m.get(), a, MPFR_RNDN);
  int inexact = mpfr_div_si(m.get(), m.get(), b, MPFR_RNDN);
  RealBall r(std::move(m), rad_zero());
  if (inexact) r.add_error(round_err(r.mid(), prec));
  return r;
}

RealBall RealBall::from_interval(const Real& lo, const Real& hi, Bits prec) {
  Real m(prec);
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  Real r1(kRadiusBits), r2(kRadiusBits);
  mpfr_sub(r1.get(), hi.get(), m.get(), MPFR_RNDU);
  mpfr_sub(r2.get(), m.get(), lo.get(), MPFR_RNDU);
  Real r = cmp(r1, r2) > 0 ? r1 : r2;
  return RealBall(std::move(m), std::move(r));
}

Real RealBall::lower() const {
  Real r(std::max<Bits>(precision(), kRadiusBits));
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Real RealBall::upper() const {
  Real r(std::max<Bits>(precision(), kRadiusBits));
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

bool RealBall::contains_zero() const { return certified_sign() == 0; }
bool RealBall::is_positive() const { return certified_sign() > 0; }
bool RealBall::is_negative() const { return certified_sign() < 0; }

int RealBall::certified_sign() const {
  if (lower().sign() > 0) return 1;
  if (upper().sign() < 0) return -1;
  return 0;
}

bool RealBall::contains(const Real& x) const { return cmp(lower(), x) <= 0 && cmp(x, upper()) <= 0; }

bool RealBall::overlaps(const RealBall& o) const {
  return cmp(lower(), o.upper()) <= 0 && cmp(o.lower(), upper()) <= 0;
}

void RealBall::add_error(const Real& e) { mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU); }

RealBall operator+(const RealBall& a, const RealBall& b) {
  Bits p = std::max(a.precision(), b.precision());
  Real m(p);
  int inexact = mpfr_add(m.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  RealBall r(std::move(m), add_up(a.rad(), b.rad()));
  if (inexact) r.add_error(round_err(r.mid(), p));
  return r;
}

RealBall operator-(const RealBall& a) {
  Real m(a.precision());
  mpfr_neg(m.get(), a.mid().get(), MPFR_RNDN);
  return RealBall(std::move(m), a.rad());
}

RealBall operator-(const RealBall& a, const RealBall& b) { return a + (-b); }

RealBall operator*(const RealBall& a, const RealBall& b) {
  Bits p = std::max(a.precision(), b.precision());
  Real m(p);
  int inexact = mpfr_mul(m.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Real rad = add_up(add_up(mul_up(abs_upper(a.mid()), b.rad()), mul_up(abs_upper(b.mid()), a.rad())),
                    mul_up(a.rad(), b.rad()));
  RealBall r(std::move(m), std::move(rad));
  if (inexact) r.add_error(round_err(r.mid(), p));
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  Real blo = sub_down(abs_down(b.mid()), b.rad());
  if (blo.sign() <= 0) throw PrecisionError("division by a ball containing zero", 2 * b.precision());
  Bits p = std::max(a.precision(), b.precision());
  Real m(p);
  mpfr_div(m.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Real num = add_up(mul_up(a.rad(), abs_upper(b.mid())), mul_up(abs_upper(a.mid()), b.rad()));
  Real den(kRadiusBits);
  mpfr_mul(den.get(), abs_down(b.mid()).get(), blo.get(), MPFR_RNDD);
  RealBall r(std::move(m), div_up(num, den));
  r.add_error(round_err(r.mid(), p));
  return r;
}

RealBall log(const RealBall& x) {
  Real lo = sub_down(x.mid(), x.rad());
  if (lo.sign() <= 0) throw PrecisionError("log of a ball that is not certified positive", 2 * x.precision());
  Real m(x.precision());
  mpfr_log(m.get(), x.mid().get(), MPFR_RNDN);
  RealBall r(std::move(m), div_up(x.rad(), lo));
  r.add_error(round_err(r.mid(), x.precision()));
  r.add_error(unit(x.precision()));
  return r;
}

RealBall sqrt(const RealBall& x) {
  Real lo = sub_down(x.mid(), x.rad());
  if (lo.sign() < 0) throw PrecisionError("sqrt of a ball that is not certified nonnegative", 2 * x.precision());
  Real m(x.precision());
  mpfr_sqrt(m.get(), x.mid().get(), MPFR_RNDN);
  Real rad(kRadiusBits);
  if (m.is_zero()) {
    mpfr_sqrt(rad.get(), x.rad().get(), MPFR_RNDU);
  } else {
    Real sm(kRadiusBits);
    mpfr_sqrt(sm.get(), x.mid().get(), MPFR_RNDD);
    rad = div_up(x.rad(), sm);
  }
  RealBall r(std::move(m), std::move(rad));
  r.add_error(round_err(r.mid(), x.precision()));
  return r;
}

RealBall frac(const RealBall& x) {
  Real m(x.precision());
  mpfr_frac(m.get(), x.mid().get(), MPFR_RNDN);
  if (m.sign() < 0) mpfr_add_ui(m.get(), m.get(), 1, MPFR_RNDN);
  return RealBall(std::move(m), x.rad());
}

RealBall dist_to_integer(const RealBall& x) {
  Real m(x.precision());
  Real rounded(x.precision());
  mpfr_rint(rounded.get(), x.mid().get(), MPFR_RNDN);
  mpfr_sub(m.get(), x.mid().get(), rounded.get(), MPFR_RNDN);
  mpfr_abs(m.get(), m.get(), MPFR_RNDN);
  return RealBall(std::move(m), x.rad());
}

RealBall pi_ball(Bits prec) {
  Real m(prec);
  mpfr_const_pi(m.get(), MPFR_RNDN);
  RealBall r(std::move(m), rad_zero());
  r.add_error(mul_up(rad_from_double(4.0), unit(prec)));
  return r;
}

// ---------------------------------------------------------------- ComplexBall

ComplexBall::ComplexBall(Bits prec) : mid_(prec), rad_(rad_zero()) {}

ComplexBall::ComplexBall(Complex mid, Real rad) : mid_(std::move(mid)), rad_(rad_zero()) {
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

ComplexBall::ComplexBall(const RealBall& re, const RealBall& im)
    : mid_(Complex(re.mid(), im.mid())), rad_(add_up(re.rad(), im.rad())) {
  if (re.precision() != im.precision()) {
    Bits p = std::max(re.precision(), im.precision());
    mpfr_prec_round(mid_.re.get(), p, MPFR_RNDN);
    mpfr_prec_round(mid_.im.get(), p, MPFR_RNDN);
  }
}

ComplexBall ComplexBall::from_real(const RealBall& x) { return ComplexBall(x, RealBall(x.precision())); }

ComplexBall ComplexBall::exact(const mpz_class& re, const mpz_class& im, Bits prec) {
  return ComplexBall(RealBall::exact(re, prec), RealBall::exact(im, prec));
}

ComplexBall ComplexBall::unit_from_turns(const RealBall& t) {
  Bits p = t.precision();
  RealBall ang = t * pi_ball(p) * RealBall::exact(2, p);
  Complex m(p);
  mpfr_sin_cos(m.im.get(), m.re.get(), ang.mid().get(), MPFR_RNDN);
  // |e^{i a} - e^{i a0}| <= |a - a0|
  ComplexBall r(std::move(m), ang.rad());
  r.add_error(mul_up(rad_from_double(2.0), unit(p)));
  return r;
}

RealBall ComplexBall::real_part() const { return RealBall(mid_.re, rad_); }
RealBall ComplexBall::imag_part() const { return RealBall(mid_.im, rad_); }

bool ComplexBall::contains_zero() const { return cmp(hypot_down(mid_.re, mid_.im), rad_) <= 0; }

bool ComplexBall::overlaps(const ComplexBall& o) const {
  Bits p = std::max(precision(), o.precision()) + 8;
  Real dr(p), di(p);
  mpfr_sub(dr.get(), mid_.re.get(), o.mid_.re.get(), MPFR_RNDN);
  mpfr_sub(di.get(), mid_.im.get(), o.mid_.im.get(), MPFR_RNDN);
  // differences of p-8 bit numbers are exact at p bits unless exponents are far apart
  Real dist = hypot_down(dr, di);
  Real slack = add_up(add_up(rad_, o.rad_), mul_up(add_up(abs_upper(dr), abs_upper(di)), unit(p - 8)));
  return cmp(dist, slack) <= 0;
}

double ComplexBall::approx_abs() const { return std::hypot(mid_.re.to_double(), mid_.im.to_double()); }

double ComplexBall::approx_arg() const {
  double a = std::atan2(mid_.im.to_double(), mid_.re.to_double());
  if (a < 0) a += 2.0 * M_PI;
  return a;
}

ComplexBall ComplexBall::conj() const {
  Complex m(mid_.re, mid_.im);
  mpfr_neg(m.im.get(), m.im.get(), MPFR_RNDN);
  return ComplexBall(std::move(m), rad_);
}

void ComplexBall::add_error(const Real& e) { mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU); }

ComplexBall ComplexBall::with_precision(Bits prec) const {
  Complex m(prec);
  int i1 = mpfr_set(m.re.get(), mid_.re.get(), MPFR_RNDN);
  int i2 = mpfr_set(m.im.get(), mid_.im.get(), MPFR_RNDN);
  ComplexBall r(std::move(m), rad_);
  if (i1 || i2) r.add_error(mul_up(add_up(abs_upper(r.re()), abs_upper(r.im())), unit(prec)));
  return r;
}

namespace {

Real abs1_upper(const Complex& z) { return add_up(abs_upper(z.re), abs_upper(z.im)); }

}  // namespace

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  Bits p = std::max(a.precision(), b.precision());
  Complex m(p);
  int i1 = mpfr_add(m.re.get(), a.re().get(), b.re().get(), MPFR_RNDN);
  int i2 = mpfr_add(m.im.get(), a.im().get(), b.im().get(), MPFR_RNDN);
  ComplexBall r(std::move(m), add_up(a.rad(), b.rad()));
  if (i1 || i2) r.add_error(mul_up(abs1_upper(r.mid()), unit(p)));
  return r;
}

ComplexBall operator-(const ComplexBall& a) {
  Complex m(a.mid().re, a.mid().im);
  mpfr_neg(m.re.get(), m.re.get(), MPFR_RNDN);
  mpfr_neg(m.im.get(), m.im.get(), MPFR_RNDN);
  return ComplexBall(std::move(m), a.rad());
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return a + (-b); }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  Bits p = std::max(a.precision(), b.precision());
  Complex m(p);
  // single rounding per component
  int i1 = mpfr_fmms(m.re.get(), a.re().get(), b.re().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  int i2 = mpfr_fmma(m.im.get(), a.re().get(), b.im().get(), a.im().get(), b.re().get(), MPFR_RNDN);
  Real absa = hypot_up(a.re(), a.im());
  Real absb = hypot_up(b.re(), b.im());
  Real rad = add_up(add_up(mul_up(absa, b.rad()), mul_up(absb, a.rad())), mul_up(a.rad(), b.rad()));
  ComplexBall r(std::move(m), std::move(rad));
  if (i1 || i2) r.add_error(mul_up(abs1_upper(r.mid()), unit(p)));
  return r;
}

ComplexBall operator*(const ComplexBall& a, const RealBall& b) { return a * ComplexBall::from_real(b); }

ComplexBall inverse(const ComplexBall& b) {
  Real blo = hypot_down(b.re(), b.im());
  Real margin = sub_down(blo, b.rad());
  if (margin.sign() <= 0) throw PrecisionError("inverse of a complex ball containing zero", 2 * b.precision());
  Bits p = b.precision();
  Real n(p);
  mpfr_fmma(n.get(), b.re().get(), b.re().get(), b.im().get(), b.im().get(), MPFR_RNDN);
  Complex m(p);
  mpfr_div(m.re.get(), b.re().get(), n.get(), MPFR_RNDN);
  mpfr_div(m.im.get(), b.im().get(), n.get(), MPFR_RNDN);
  mpfr_neg(m.im.get(), m.im.get(), MPFR_RNDN);
  // |1/z - 1/z0| <= r / (|z0| (|z0| - r))
  Real den(kRadiusBits);
  mpfr_mul(den.get(), blo.get(), margin.get(), MPFR_RNDD);
  Real rad = div_up(b.rad(), den);
  ComplexBall r(std::move(m), std::move(rad));
  // three roundings per component, relative to 1/|z0|
  r.add_error(mul_up(div_up(rad_from_double(8.0), blo), unit(p)));
  return r;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * inverse(b); }

ComplexBall square(const ComplexBall& a) { return a * a; }

ComplexBall pow(const ComplexBall& a, unsigned long k) {
  ComplexBall result = ComplexBall::exact(1, 0, a.precision());
  ComplexBall base = a;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1U;
    if (k > 0) base = square(base);
  }
  return result;
}

ComplexBall sqrt(const ComplexBall& z) {
  Bits p = z.precision();
  Complex w(p);
  Real az(p + 8);
  mpfr_hypot(az.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  if (az.is_zero()) {
    Real rad(kRadiusBits);
    mpfr_sqrt(rad.get(), z.rad().get(), MPFR_RNDU);
    return ComplexBall(std::move(w), std::move(rad));
  }
  Real t(p + 8);
  if (z.re().sign() >= 0) {
    mpfr_add(t.get(), az.get(), z.re().get(), MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
    mpfr_set(w.re.get(), t.get(), MPFR_RNDN);
    mpfr_div(w.im.get(), z.im().get(), t.get(), MPFR_RNDN);
    mpfr_div_2ui(w.im.get(), w.im.get(), 1, MPFR_RNDN);
  } else {
    mpfr_sub(t.get(), az.get(), z.re().get(), MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
    Real ai(p + 8);
    mpfr_abs(ai.get(), z.im().get(), MPFR_RNDN);
    mpfr_div(w.re.get(), ai.get(), t.get(), MPFR_RNDN);
    mpfr_div_2ui(w.re.get(), w.re.get(), 1, MPFR_RNDN);
    mpfr_set(w.im.get(), t.get(), MPFR_RNDN);
    if (z.im().sign() < 0) mpfr_neg(w.im.get(), w.im.get(), MPFR_RNDN);
  }
  // lower bound of |w0| = sqrt|z0|
  Real wlo(kRadiusBits);
  mpfr_sqrt(wlo.get(), hypot_down(z.re(), z.im()).get(), MPFR_RNDD);
  Real rad = z.rad().is_zero() ? rad_zero() : div_up(z.rad(), wlo);
  ComplexBall r(std::move(w), std::move(rad));
  r.add_error(mul_up(mul_up(rad_from_double(8.0), abs1_upper(r.mid())), unit(p)));
  return r;
}

RealBall abs(const ComplexBall& z) {
  Real m(z.precision());
  mpfr_hypot(m.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  RealBall r(std::move(m), z.rad());
  r.add_error(round_err(r.mid(), z.precision()));
  return r;
}

RealBall turns(const ComplexBall& z) {
  Bits p = z.precision();
  Real zlo = hypot_down(z.re(), z.im());
  Real a(p + 16);
  mpfr_atan2(a.get(), z.im().get(), z.re().get(), MPFR_RNDN);
  Real twopi(p + 16);
  mpfr_const_pi(twopi.get(), MPFR_RNDN);
  mpfr_mul_2ui(twopi.get(), twopi.get(), 1, MPFR_RNDN);
  Real t(p);
  mpfr_div(t.get(), a.get(), twopi.get(), MPFR_RNDN);
  if (t.sign() < 0) mpfr_add_ui(t.get(), t.get(), 1, MPFR_RNDN);
  Real rad(kRadiusBits);
  if (cmp(zlo, z.rad()) <= 0) {
    mpfr_set_d(rad.get(), 0.5, MPFR_RNDU);
  } else {
    // angular deviation <= asin(r/|z0|) <= (pi/2) r/|z0|; in turns r/(4|z0|)
    rad = div_up(z.rad(), zlo);
    mpfr_div_2ui(rad.get(), rad.get(), 2, MPFR_RNDU);
  }
  RealBall r(std::move(t), std::move(rad));
  r.add_error(mul_up(rad_from_double(4.0), unit(p)));
  return r;
}

ComplexBall eval(const IntPoly& p, const ComplexBall& z) {
  Bits prec = z.precision();
  const auto& c = p.coeffs();
  if (c.empty()) return ComplexBall(prec);
  ComplexBall acc = ComplexBall::from_real(RealBall::exact(c.back(), prec));
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * z;
    if (c[i] != 0) acc = acc + ComplexBall::from_real(RealBall::exact(c[i], prec));
  }
  return acc;
}

RealBall eval(const IntPoly& p, const RealBall& x) {
  Bits prec = x.precision();
  const auto& c = p.coeffs();
  if (c.empty()) return RealBall(prec);
  RealBall acc = RealBall::exact(c.back(), prec);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * x;
    if (c[i] != 0) acc = acc + RealBall::exact(c[i], prec);
  }
  return acc;
}

std::string mid_string(const Real& x) { return x.to_decimal(decimal_digits(x.precision())); }

std::string rad_string(const Real& r) { return r.to_decimal(6, MPFR_RNDU); }

}  // namespace salemforge
