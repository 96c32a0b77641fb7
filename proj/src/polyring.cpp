#include "salemforge/polyring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"

namespace salemforge {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

std::size_t IntPoly::deg() const {
  if (c_.empty()) throw PreconditionError("degree of the zero polynomial is undefined");
  return c_.size() - 1;
}

mpz_class IntPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return c_.back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reverse() const {
  std::vector<mpz_class> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::negated() const {
  std::vector<mpz_class> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

mpz_class IntPoly::height() const {
  mpz_class h = 0;
  for (const auto& v : c_) {
    if (abs(v) > h) h = abs(v);
  }
  return h;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return {};
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> r(c_);
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    mpz_class a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < x.size()) r[i] += x[i];
    if (i < y.size()) r[i] += y[i];
  }
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < x.size()) r[i] += x[i];
    if (i < y.size()) r[i] -= y[i];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const mpz_class& s) {
  std::vector<mpz_class> r(a.coeffs());
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

DivMod divmod(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (!q.is_monic()) throw NotMonicError("divmod requires a monic divisor, got leading coefficient " +
                                         q.leading().get_str());
  const std::size_t dq = q.deg();
  if (p.is_zero() || p.deg() < dq) return {IntPoly{}, p};
  std::vector<mpz_class> r(p.coeffs());
  const auto& qc = q.coeffs();
  std::vector<mpz_class> quot(r.size() - dq);
  for (std::size_t i = r.size(); i-- > dq;) {
    const std::size_t shift = i - dq;
    mpz_class c = r[i];
    quot[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), qc[j].get_mpz_t());
    }
  }
  r.resize(dq);
  return {IntPoly(std::move(quot)), IntPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (p.is_zero()) return {};
  const std::size_t dq = q.deg();
  if (p.deg() < dq) throw ConsistencyError("exact_div: divisor degree exceeds dividend degree");
  std::vector<mpz_class> r(p.coeffs());
  const auto& qc = q.coeffs();
  const mpz_class& lc = qc.back();
  std::vector<mpz_class> quot(r.size() - dq);
  for (std::size_t i = r.size(); i-- > dq;) {
    const std::size_t shift = i - dq;
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) {
      throw ConsistencyError("exact_div: quotient is not integral");
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    quot[shift] = c;
    for (std::size_t j = 0; j <= dq; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), qc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (r[i] != 0) throw ConsistencyError("exact_div: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw PreconditionError("pseudo-remainder by the zero polynomial");
  if (p.is_zero() || p.deg() < q.deg()) return p;
  const std::size_t dq = q.deg();
  const auto& qc = q.coeffs();
  const mpz_class& lc = qc.back();
  std::vector<mpz_class> r(p.coeffs());
  for (std::size_t i = r.size(); i-- > dq;) {
    const std::size_t shift = i - dq;
    mpz_class c = r[i];
    for (std::size_t j = 0; j < i; ++j) r[j] *= lc;
    r[i] = 0;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dq; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), qc[j].get_mpz_t());
    }
  }
  r.resize(dq);
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.deg() < y.deg()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_rem(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.is_zero()) throw PreconditionError("square-free decomposition of the zero polynomial");
  IntPoly f = p.primitive_part();
  if (f.deg() == 0) return out;
  IntPoly df = f.derivative();
  IntPoly a = gcd(f, df);
  IntPoly b = exact_div(f, a);
  IntPoly c = exact_div(df, a);
  IntPoly d = c - b.derivative();
  int i = 1;
  while (b.deg() > 0) {
    IntPoly g = gcd(b, d);
    if (g.deg() > 0) out.emplace_back(g, i);
    IntPoly nb = exact_div(b, g);
    c = exact_div(d, g);
    b = nb;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

mpz_class eval_int(const IntPoly& p, const mpz_class& t) {
  mpz_class acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= t;
    acc += c[i];
  }
  return acc;
}

bool is_reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("is_reciprocal: zero polynomial");
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

bool is_reciprocal_up_to_sign(const IntPoly& p) {
  if (is_reciprocal(p)) return true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != -c[c.size() - 1 - i]) return false;
  }
  return true;
}

IntPoly x_pow_minus_one(std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[0] = -1;
  v[k] += 1;
  return IntPoly(std::move(v));
}

namespace {

IntPoly cyclotomic_memo(unsigned long d, std::map<unsigned long, IntPoly>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  IntPoly r = x_pow_minus_one(d);
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e == 0) r = divmod(r, cyclotomic_memo(e, memo)).quotient;
  }
  memo.emplace(d, r);
  return r;
}

}  // namespace

IntPoly cyclotomic(unsigned long d) {
  if (d == 0) throw PreconditionError("cyclotomic: order must be positive");
  std::map<unsigned long, IntPoly> memo;
  return cyclotomic_memo(d, memo);
}

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("polynomial JSON must be an array of decimal strings");
  std::vector<mpz_class> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw PreconditionError("polynomial coefficients must be decimal strings");
    mpz_class c;
    if (c.set_str(e.get<std::string>(), 10) != 0) {
      throw PreconditionError("malformed coefficient: " + e.get<std::string>());
    }
    v.push_back(std::move(c));
  }
  return IntPoly(std::move(v));
}

}  // namespace salemforge
