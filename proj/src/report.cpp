#include "salemforge/report.hpp"

#include "salemforge/errors.hpp"

namespace salemforge {

namespace {

// The printed midpoint carries one more rounding; widen the radius by it.
Real print_slack(const Real& x) {
  if (x.is_zero()) return rad_zero();
  return rad_pow2(mpfr_get_exp(x.get()) - static_cast<long>(x.precision()) + 3);
}

}  // namespace

nlohmann::json ball_json(const RealBall& x) {
  return {{"mid", mid_string(x.mid())}, {"radius", rad_string(add_up(x.rad(), print_slack(x.mid())))}};
}

nlohmann::json ball_json(const ComplexBall& z) {
  Real rad = add_up(z.rad(), add_up(print_slack(z.re()), print_slack(z.im())));
  return {{"re", mid_string(z.re())}, {"im", mid_string(z.im())}, {"radius", rad_string(rad)}};
}

namespace {

std::string field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw PreconditionError(std::string("missing decimal field \"") + key + "\"");
  return j[key].get<std::string>();
}

}  // namespace

RealBall real_ball_from_json(const nlohmann::json& j, Bits prec) {
  Real mid(field(j, "mid"), prec);
  Real rad(field(j, "radius"), kRadiusBits, MPFR_RNDU);
  RealBall b(mid, rad);
  // decimal rendering of the midpoint: one unit in the last printed digit
  b.add_error(rad_pow2(-static_cast<long>(prec) + 4 + std::max<long>(0, mpfr_get_exp(mid.get()))));
  return b;
}

ComplexBall complex_ball_from_json(const nlohmann::json& j, Bits prec) {
  Complex m(Real(field(j, "re"), prec), Real(field(j, "im"), prec));
  Real rad(field(j, "radius"), kRadiusBits, MPFR_RNDU);
  long e = std::max<long>(0, std::max(mpfr_get_exp(m.re.get()), mpfr_get_exp(m.im.get())));
  ComplexBall b(std::move(m), rad);
  b.add_error(rad_pow2(-static_cast<long>(prec) + 5 + e));
  return b;
}

}  // namespace salemforge
