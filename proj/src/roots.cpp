#include "salemforge/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "mpcomplex.hpp"
#include "salemforge/errors.hpp"

namespace salemforge {

using detail::cadd;
using detail::cdiv;
using detail::clog2abs;
using detail::cmake;
using detail::cmul;
using detail::cpow;
using detail::cscale;
using detail::csub;

std::string to_string(RootTag t) {
  switch (t) {
    case RootTag::outside_circle: return "outside_circle";
    case RootTag::inside_circle: return "inside_circle";
    case RootTag::on_circle: return "on_circle";
    case RootTag::real_gt_1: return "real_gt_1";
    case RootTag::real_in_01: return "real_in_01";
    case RootTag::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::size_t RootSet::count(RootTag t) const {
  return static_cast<std::size_t>(
      std::count_if(roots.begin(), roots.end(), [t](const CertifiedRoot& r) { return r.tag == t; }));
}

RealBall unit_circle_distance(const ComplexBall& z) {
  return abs(z) - RealBall::exact(1, z.precision());
}

namespace {

std::vector<Real> to_reals(const IntPoly& f, Bits prec) {
  std::vector<Real> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c, prec);
  return out;
}

struct ValDer {
  Complex v;
  Complex d;
};

ValDer horner(const std::vector<Real>& c, const Complex& z) {
  Bits p = std::max(z.precision(), c.back().precision());
  Complex v(Real(c.back()), Real(p));
  Complex d = cmake(0.0, 0.0, p);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    d = cadd(cmul(d, z), v);
    v = cmul(v, z);
    mpfr_add(v.re.get(), v.re.get(), c[i].get(), MPFR_RNDN);
  }
  return {std::move(v), std::move(d)};
}

double log2_abs_mpz(const mpz_class& a) {
  if (a == 0) return -INFINITY;
  long e = 0;
  double m = mpz_get_d_2exp(&e, a.get_mpz_t());
  return static_cast<double>(e) + std::log2(std::fabs(m));
}

// Fujiwara bound on the root moduli.
double fujiwara(const IntPoly& f) {
  std::size_t n = f.deg();
  double lead = log2_abs_mpz(f.leading());
  double best = -INFINITY;
  for (std::size_t k = 1; k <= n; ++k) {
    double a = log2_abs_mpz(f.coeff(n - k));
    if (a == -INFINITY) continue;
    if (k == n) a -= 1.0;
    best = std::max(best, (a - lead) / static_cast<double>(k));
  }
  if (best == -INFINITY) return 1.0;
  return std::exp2(best + 1.0);
}

// Aberth-Ehrlich iteration; returns false when it did not settle.
bool aberth(const IntPoly& f, Bits prec, std::vector<Complex>& z) {
  std::size_t n = f.deg();
  auto c = to_reals(f, prec);
  double R = fujiwara(f);
  z.clear();
  for (std::size_t k = 0; k < n; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4 + 0.01 * static_cast<double>(k % 7);
    z.push_back(cmake(R * std::cos(ang), R * std::sin(ang), prec));
  }
  std::vector<bool> done(n, false);
  double tol = -static_cast<double>(prec) + 12.0;
  const int max_iter = 200 + 20 * static_cast<int>(n);
  Complex one = cmake(1.0, 0.0, prec);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      ValDer vd = horner(c, z[i]);
      if (mpfr_zero_p(vd.v.re.get()) && mpfr_zero_p(vd.v.im.get())) {
        done[i] = true;
        continue;
      }
      if (mpfr_zero_p(vd.d.re.get()) && mpfr_zero_p(vd.d.im.get())) {
        z[i] = cadd(z[i], cmake(1e-3, 1e-3, prec));
        all = false;
        continue;
      }
      Complex ratio = cdiv(vd.v, vd.d);
      Complex s = cmake(0.0, 0.0, prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = csub(z[i], z[j]);
        if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get())) continue;
        s = cadd(s, cdiv(one, diff));
      }
      Complex w = cdiv(ratio, csub(one, cmul(ratio, s)));
      z[i] = csub(z[i], w);
      double lz = std::max(0.0, clog2abs(z[i]));
      if (clog2abs(w) <= tol + lz) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) return true;
  }
  return false;
}

// Newton steps on a simple root until the step falls below 2^-(prec-8).
Complex newton_polish(const std::vector<Real>& c, Complex z, Bits prec) {
  double tol = -static_cast<double>(prec) + 8.0;
  for (int it = 0; it < 64; ++it) {
    ValDer vd = horner(c, z);
    if (mpfr_zero_p(vd.d.re.get()) && mpfr_zero_p(vd.d.im.get())) break;
    Complex step = cdiv(vd.v, vd.d);
    z = csub(z, step);
    if (clog2abs(step) <= tol + std::max(0.0, clog2abs(z))) break;
  }
  return z;
}

// Disc around z guaranteed to contain a root of f: radius deg * |f(z)| / |f'(z)|.
ComplexBall newton_disc(const IntPoly& f, const IntPoly& df, const Complex& z, unsigned long degree) {
  ComplexBall zb(z, rad_zero());
  ComplexBall fv = eval(f, zb);
  ComplexBall dv = eval(df, zb);
  RealBall af = abs(fv);
  RealBall ad = abs(dv);
  if (!ad.is_positive()) throw PrecisionError("derivative not bounded away from zero", 2 * z.precision());
  Real num = mul_up(af.upper(), rad_from_double(static_cast<double>(degree)));
  Real rad = div_up(num, ad.lower());
  return ComplexBall(Complex(z.re, z.im), rad);
}

bool rad_below(const ComplexBall& b, long log2_bound) { return cmp(b.rad(), rad_pow2(log2_bound)) <= 0; }

// Snap a ball certified to contain a real value onto the real axis.
ComplexBall snap_real(const ComplexBall& b) {
  Real rad = add_up(b.rad(), abs_upper(b.im()));
  Complex m(b.re(), Real(b.precision()));
  return ComplexBall(std::move(m), rad);
}

void sort_roots(std::vector<CertifiedRoot>& roots) {
  std::stable_sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    double aa = a.value.approx_arg(), ba = b.value.approx_arg();
    if (aa != ba) return aa < ba;
    return a.value.approx_abs() < b.value.approx_abs();
  });
}

// Tags by conjugate and reciprocal pairing, then by separation from the circle.
void tag_roots(std::vector<CertifiedRoot>& roots, bool reciprocal) {
  const std::size_t N = roots.size();
  for (std::size_t i = 0; i < N; ++i) {
    ComplexBall c = roots[i].value.conj();
    bool unique = true;
    for (std::size_t j = 0; j < N && unique; ++j) {
      if (j != i && c.overlaps(roots[j].value)) unique = false;
    }
    roots[i].real = unique;
  }
  for (std::size_t i = 0; i < N; ++i) {
    auto& r = roots[i];
    if (r.real) r.value = snap_real(r.value);
  }
  for (std::size_t i = 0; i < N; ++i) {
    auto& r = roots[i];
    if (r.real) {
      RealBall x = r.value.real_part();
      RealBall one = RealBall::exact(1, x.precision());
      if ((x - one).is_positive()) {
        r.tag = RootTag::real_gt_1;
        continue;
      }
      if (x.is_positive() && (one - x).is_positive()) {
        r.tag = RootTag::real_in_01;
        continue;
      }
    }
    bool circle = false;
    if (reciprocal && !r.value.contains_zero()) {
      ComplexBall img = inverse(r.value.conj());
      circle = true;
      for (std::size_t j = 0; j < N && circle; ++j) {
        if (j != i && img.overlaps(roots[j].value)) circle = false;
      }
      circle = circle && img.overlaps(r.value);
    }
    if (circle) {
      r.tag = RootTag::on_circle;
      continue;
    }
    int s = unit_circle_distance(r.value).certified_sign();
    r.tag = s > 0 ? RootTag::outside_circle : s < 0 ? RootTag::inside_circle : RootTag::undetermined;
  }
}

struct Attempt {
  bool ok = false;
  std::vector<CertifiedRoot> roots;
};

Attempt try_isolate(const std::vector<std::pair<IntPoly, int>>& parts, Bits bits, Bits stage, Bits work) {
  Attempt a;
  for (const auto& [f, mult] : parts) {
    std::size_t n = f.deg();
    if (n == 0) continue;
    IntPoly df = f.derivative();
    std::vector<Complex> z;
    if (n == 1) {
      Real num(-f.coeff(0), work), den(f.coeff(1), work);
      Complex r(work);
      mpfr_div(r.re.get(), num.get(), den.get(), MPFR_RNDN);
      z.push_back(std::move(r));
    } else if (!aberth(f, stage, z)) {
      return a;
    }
    auto c = to_reals(f, work);
    for (auto& zi : z) {
      Complex w = newton_polish(c, detail::cset(zi, work), work);
      ComplexBall disc = newton_disc(f, df, w, n);
      if (!rad_below(disc, -static_cast<long>(bits) / 2)) return a;
      a.roots.push_back(CertifiedRoot{std::move(disc), mult, RootTag::undetermined, false});
    }
  }
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < a.roots.size(); ++j) {
      if (a.roots[i].value.overlaps(a.roots[j].value)) return a;
    }
  }
  a.ok = true;
  return a;
}

}  // namespace

RootSet isolate_roots(const IntPoly& p, Bits precision_bits) {
  if (p.is_zero()) throw PreconditionError("isolate_roots: zero polynomial");
  if (precision_bits < 16) throw PreconditionError("isolate_roots: precision below 16 bits");
  RootSet rs;
  rs.poly = p;
  rs.precision_bits = precision_bits;
  if (p.deg() == 0) return rs;
  auto parts = squarefree_decomposition(p);
  std::size_t maxdeg = 1;
  for (const auto& pr : parts) maxdeg = std::max<std::size_t>(maxdeg, pr.first.deg());
  Bits logn = static_cast<Bits>(std::ceil(std::log2(static_cast<double>(maxdeg) + 1.0)));
  Bits stage = 128;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Bits work = std::max(precision_bits, stage) + 64 + 4 * logn;
    Attempt a = try_isolate(parts, precision_bits, stage, work);
    if (a.ok) {
      tag_roots(a.roots, is_reciprocal_up_to_sign(p));
      sort_roots(a.roots);
      rs.roots = std::move(a.roots);
      return rs;
    }
    stage *= 2;
  }
  throw PrecisionError("isolate_roots: could not isolate roots", 2 * stage);
}

SalemCertificate classify_salem(const RootSet& rs) {
  const IntPoly& p = rs.poly;
  if (p.is_zero() || !p.is_monic() || !is_reciprocal(p) || p.deg() % 2 != 0)
    throw PreconditionError("classify_salem: polynomial must be monic, reciprocal and of even degree");
  std::size_t n = rs.roots.size();
  auto name = [&](std::size_t i) {
    std::ostringstream os;
    os << "root #" << i << " (" << rs.roots[i].value.re().to_decimal(12) << " + "
       << rs.roots[i].value.im().to_decimal(12) << "i)";
    return os.str();
  };
  std::optional<std::size_t> eta, inv;
  std::size_t circle = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = rs.roots[i];
    if (r.multiplicity != 1) throw NotSalemError("repeated " + name(i));
    switch (r.tag) {
      case RootTag::real_gt_1:
        if (eta) throw NotSalemError("second root outside the unit circle: " + name(i));
        eta = i;
        break;
      case RootTag::real_in_01:
        if (inv) throw NotSalemError("second root inside the unit circle: " + name(i));
        inv = i;
        break;
      case RootTag::on_circle: ++circle; break;
      case RootTag::outside_circle: throw NotSalemError("non-real root outside the unit circle: " + name(i));
      case RootTag::inside_circle: throw NotSalemError("non-real root inside the unit circle: " + name(i));
      case RootTag::undetermined:
        throw PrecisionError("classify_salem: position of " + name(i) + " not certified", 2 * rs.precision_bits);
    }
  }
  if (!eta) throw NotSalemError("no real root greater than 1");
  if (!inv) throw NotSalemError("no real root in (0, 1)");
  ComplexBall partner = inverse(rs.roots[*eta].value);
  if (!partner.overlaps(rs.roots[*inv].value)) throw NotSalemError("reciprocal partner of eta missing");
  SalemCertificate cert;
  cert.eta = rs.roots[*eta].value.real_part();
  cert.eta_index = *eta;
  cert.inverse_index = *inv;
  cert.circle_count = circle;
  cert.note = "Salem root pattern certified; irreducibility not verified symbolically";
  return cert;
}

EntropyValue entropy_from_charpoly(const IntPoly& p, Bits precision_bits) {
  RootSet rs = isolate_roots(p, precision_bits);
  Bits prec = precision_bits + 16;
  EntropyValue out;
  bool all_inside = true;
  Real lo(1.0, prec);
  Real hi(1.0, prec);
  for (const auto& r : rs.roots) {
    bool inside = r.tag == RootTag::on_circle || r.tag == RootTag::inside_circle || r.tag == RootTag::real_in_01;
    if (inside) continue;
    RealBall a = abs(r.value);
    if (!a.upper().is_zero() && cmp(a.upper(), Real(1.0, prec)) > 0) all_inside = false;
    if (cmp(a.lower(), lo) > 0) mpfr_set(lo.get(), a.lower().get(), MPFR_RNDD);
    if (cmp(a.upper(), hi) > 0) mpfr_set(hi.get(), a.upper().get(), MPFR_RNDU);
  }
  if (all_inside) {
    out.value = RealBall(prec);
    out.exact_zero = true;
    return out;
  }
  out.value = log(RealBall::from_interval(lo, hi, prec));
  return out;
}

// ---------------------------------------------------------------- Coxeter locator

namespace {

struct SparseF {
  unsigned long n;

  // F(x) = x^(n-2) p(x) + q(x), p = x^3 - x - 1, q = x^3 + x^2 - 1.
  ValDer eval_mid(const Complex& z) const {
    Bits prec = z.precision();
    Complex z2 = cmul(z, z);
    Complex z3 = cmul(z2, z);
    Complex zn3 = cpow(z, n - 3);
    Complex zn2 = cmul(zn3, z);
    Complex one = cmake(1.0, 0.0, prec);
    Complex pv = csub(csub(z3, z), one);
    Complex qv = csub(cadd(z3, z2), one);
    Complex dp = csub(cscale(z2, 3), one);
    Complex dq = cadd(cscale(z2, 3), cscale(z, 2));
    Complex v = cadd(cmul(zn2, pv), qv);
    Complex d = cadd(cadd(cscale(cmul(zn3, pv), static_cast<long>(n - 2)), cmul(zn2, dp)), dq);
    return {std::move(v), std::move(d)};
  }

  std::pair<ComplexBall, ComplexBall> eval_ball(const ComplexBall& z) const {
    Bits prec = z.precision();
    auto k = [prec](long v) { return ComplexBall::exact(v, 0, prec); };
    ComplexBall z2 = z * z;
    ComplexBall z3 = z2 * z;
    ComplexBall zn3 = pow(z, n - 3);
    ComplexBall zn2 = zn3 * z;
    ComplexBall pv = z3 - z - k(1);
    ComplexBall qv = z3 + z2 - k(1);
    ComplexBall dp = k(3) * z2 - k(1);
    ComplexBall dq = k(3) * z2 + k(2) * z;
    ComplexBall v = zn2 * pv + qv;
    ComplexBall d = k(static_cast<long>(n - 2)) * zn3 * pv + zn2 * dp + dq;
    return {v, d};
  }

  Complex newton(Complex z, Bits prec) const {
    double tol = -static_cast<double>(prec) + 8.0;
    for (int it = 0; it < 80; ++it) {
      ValDer vd = eval_mid(z);
      Complex step = cdiv(vd.v, vd.d);
      z = csub(z, step);
      if (clog2abs(step) <= tol) break;
    }
    return z;
  }

  ComplexBall disc(const Complex& z) const {
    auto [v, d] = eval_ball(ComplexBall(Complex(z.re, z.im), rad_zero()));
    RealBall ad = abs(d);
    if (!ad.is_positive()) throw PrecisionError("coxeter locator: derivative vanishes", 2 * z.precision());
    Real num = mul_up(abs(v).upper(), rad_from_double(static_cast<double>(n + 1)));
    return ComplexBall(Complex(z.re, z.im), div_up(num, ad.lower()));
  }
};

std::complex<double> p_circle(double t) {
  std::complex<double> z = std::polar(1.0, t);
  return z * z * z - z - 1.0;
}

double principal(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

// Angles in (0, pi) of the unimodular roots of F via the monotone phase
// (n-5) t + 2 arg p(e^{it}) crossing multiples of 2 pi.
std::vector<double> circle_angles(unsigned long n) {
  const double nn = static_cast<double>(n);
  const std::size_t steps = 16 * static_cast<std::size_t>(n) + 64;
  const double lo = M_PI / (64.0 * nn), hi = M_PI - M_PI / (64.0 * nn);
  const double h = (hi - lo) / static_cast<double>(steps);
  std::vector<double> out;
  double t0 = lo;
  double a0 = std::arg(p_circle(t0));
  if (a0 < 0) a0 += 2.0 * M_PI;
  auto psi_at = [&](double t, double tref, double aref) {
    double a = aref + principal(std::arg(p_circle(t)) - std::arg(p_circle(tref)));
    return (nn - 5.0) * t + 2.0 * a;
  };
  double psi0 = (nn - 5.0) * t0 + 2.0 * a0;
  for (std::size_t k = 1; k <= steps; ++k) {
    double t1 = lo + h * static_cast<double>(k);
    double a1 = a0 + principal(std::arg(p_circle(t1)) - std::arg(p_circle(t0)));
    double psi1 = (nn - 5.0) * t1 + 2.0 * a1;
    double j0 = std::floor(psi0 / (2.0 * M_PI));
    double j1 = std::floor(psi1 / (2.0 * M_PI));
    if (psi1 < psi0) throw ConsistencyError("coxeter locator: phase not monotone");
    for (double j = j0 + 1.0; j <= j1; j += 1.0) {
      double target = 2.0 * M_PI * j;
      double a = t0, b = t1;
      for (int it = 0; it < 60; ++it) {
        double m = 0.5 * (a + b);
        if (psi_at(m, t0, a0) < target) a = m; else b = m;
      }
      out.push_back(0.5 * (a + b));
    }
    t0 = t1;
    a0 = a1;
    psi0 = psi1;
  }
  return out;
}

bool near_root_of_unity(double t, const std::vector<unsigned long>& orders) {
  for (unsigned long d : orders) {
    double x = t * static_cast<double>(d) / (2.0 * M_PI);
    if (std::fabs(x - std::round(x)) < 1e-7) return true;
  }
  return false;
}

// Certifies the disc avoids every root of unity of the listed orders.
void check_avoids_unity(const ComplexBall& b, const std::vector<unsigned long>& orders) {
  double t = b.approx_arg();
  double r = b.rad().to_double();
  for (unsigned long d : orders) {
    double x = t * static_cast<double>(d) / (2.0 * M_PI);
    double gap = std::fabs(x - std::round(x)) * 2.0 * M_PI / static_cast<double>(d);
    // chord >= (2/pi) * angle for angles <= pi; keep a wide margin over double error
    if (2.0 / M_PI * gap < 1e6 * r + 1e-9) throw PrecisionError("coxeter locator: disc near a cyclotomic root", 0);
  }
}

}  // namespace

RootSet isolate_coxeter_salem_roots(unsigned long n, const IntPoly& phi,
                                    const std::vector<unsigned long>& cyclotomic_orders, Bits precision_bits) {
  if (n < 10) throw PreconditionError("coxeter locator: n must be at least 10");
  if (phi.is_zero() || phi.deg() % 2 != 0 || !is_reciprocal(phi))
    throw PreconditionError("coxeter locator: phi must be reciprocal of even degree");
  const std::size_t m = phi.deg();
  SparseF F{n};
  Bits logn = static_cast<Bits>(std::ceil(std::log2(static_cast<double>(n))));
  Bits work = precision_bits + 64 + 4 * logn;

  std::vector<double> angles;
  for (double t : circle_angles(n)) {
    if (!near_root_of_unity(t, cyclotomic_orders)) angles.push_back(t);
  }
  if (2 * angles.size() + 2 != m) {
    std::ostringstream os;
    os << "coxeter locator: found " << angles.size() << " upper circle roots, expected " << (m - 2) / 2;
    throw ConsistencyError(os.str());
  }

  // real root in (1, 2): sign of F(x)/x^(n-2) = p(x) + q(x) x^(2-n)
  auto g = [n](double x) {
    return x * x * x - x - 1.0 + (x * x * x + x * x - 1.0) * std::pow(x, 2.0 - static_cast<double>(n));
  };
  double lo = 1.0 + 1e-3, hi = 2.0;
  if (!(g(lo) < 0.0 && g(hi) > 0.0)) throw ConsistencyError("coxeter locator: no sign change for the Salem root");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) lo = mid; else hi = mid;
  }
  Complex eta_mid = F.newton(cmake(0.5 * (lo + hi), 0.0, work), work);
  mpfr_set_ui(eta_mid.im.get(), 0, MPFR_RNDN);
  ComplexBall eta_disc = F.disc(eta_mid);
  if (!unit_circle_distance(eta_disc).is_positive()) throw PrecisionError("coxeter locator: Salem root not separated", 2 * work);
  ComplexBall inv_disc = inverse(eta_disc);

  std::vector<CertifiedRoot> upper;
  upper.reserve(angles.size());
  for (double t : angles) {
    Complex z = F.newton(cmake(std::cos(t), std::sin(t), work), work);
    ComplexBall d = F.disc(z);
    if (!rad_below(d, -static_cast<long>(precision_bits) / 2))
      throw PrecisionError("coxeter locator: disc radius too large", 2 * precision_bits);
    if (d.im().sign() <= 0 || !d.imag_part().is_positive())
      throw ConsistencyError("coxeter locator: Newton left the upper half-plane");
    check_avoids_unity(d, cyclotomic_orders);
    ComplexBall one = ComplexBall::exact(1, 0, work);
    if (d.overlaps(one)) throw PrecisionError("coxeter locator: disc contains 1", 2 * work);
    upper.push_back(CertifiedRoot{std::move(d), 1, RootTag::on_circle, false});
  }
  std::sort(upper.begin(), upper.end(),
            [](const CertifiedRoot& a, const CertifiedRoot& b) { return a.value.approx_arg() < b.value.approx_arg(); });

  // circle discs ordered by argument around the whole circle
  std::vector<ComplexBall> ring;
  for (const auto& r : upper) ring.push_back(r.value);
  for (std::size_t i = upper.size(); i-- > 0;) ring.push_back(upper[i].value.conj());
  const std::size_t R = ring.size();
  for (std::size_t i = 0; i < R; ++i) {
    const ComplexBall& a = ring[i];
    const ComplexBall& b = ring[(i + 1) % R];
    if (R > 1 && a.overlaps(b)) throw PrecisionError("coxeter locator: neighbouring discs overlap", 2 * work);
    if (a.overlaps(eta_disc) || a.overlaps(inv_disc)) throw PrecisionError("coxeter locator: disc meets the real pair", 2 * work);
    // on-circle: the image under z -> 1/conj(z) meets this disc and neither neighbour
    ComplexBall img = inverse(a.conj());
    if (!img.overlaps(a)) throw ConsistencyError("coxeter locator: inversion image misses its disc");
    if (R > 1 && (img.overlaps(b) || img.overlaps(ring[(i + R - 1) % R])))
      throw PrecisionError("coxeter locator: inversion image not isolated", 2 * work);
  }
  // non-adjacent discs are farther apart than adjacent ones only if every centre is close to the circle
  for (const auto& a : ring) {
    double dev = std::fabs(a.approx_abs() - 1.0);
    if (dev > 1e-12) throw ConsistencyError("coxeter locator: circle disc centre far from the circle");
  }

  RootSet rs;
  rs.poly = phi;
  rs.precision_bits = precision_bits;
  rs.roots.push_back(CertifiedRoot{snap_real(inv_disc), 1, RootTag::real_in_01, true});
  rs.roots.push_back(CertifiedRoot{eta_disc, 1, RootTag::real_gt_1, true});
  for (auto& b : ring) rs.roots.push_back(CertifiedRoot{std::move(b), 1, RootTag::on_circle, false});
  return rs;
}

}  // namespace salemforge
