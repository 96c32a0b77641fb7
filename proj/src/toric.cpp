#include "salemforge/toric.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/report.hpp"

namespace salemforge {

Fan fan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("max_cones")) throw FanError("fan JSON needs \"dim\" and \"max_cones\"");
  Fan f;
  f.dim = j.at("dim").get<int>();
  f.name = j.value("name", std::string());
  for (const auto& c : j.at("max_cones")) {
    Cone cone;
    for (const auto& row : c) cone.generators.push_back(row.get<std::vector<long>>());
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

nlohmann::json to_json(const Fan& f) {
  nlohmann::json cones = nlohmann::json::array();
  for (const auto& c : f.max_cones) cones.push_back(c.generators);
  nlohmann::json j{{"dim", f.dim}, {"max_cones", cones}};
  if (!f.name.empty()) j["name"] = f.name;
  return j;
}

Fan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open fan file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("fan file " + path + ": " + e.what());
  }
  return fan_from_json(j);
}

Fan standard_fan(const std::string& name) {
  Fan f;
  f.name = name;
  if (name == "line") {
    f.dim = 1;
    f.max_cones = {{{{1}}}, {{{-1}}}};
  } else if (name == "plane") {
    f.dim = 2;
    f.max_cones = {{{{1, 0}, {0, 1}}}, {{{0, 1}, {-1, -1}}}, {{{-1, -1}, {1, 0}}}};
  } else if (name == "p1xp1") {
    f.dim = 2;
    f.max_cones = {{{{1, 0}, {0, 1}}}, {{{0, 1}, {-1, 0}}}, {{{-1, 0}, {0, -1}}}, {{{0, -1}, {1, 0}}}};
  } else if (name.rfind("hirzebruch", 0) == 0 && name.size() > 10) {
    long e = std::stol(name.substr(10));
    f.dim = 2;
    f.max_cones = {{{{1, 0}, {0, 1}}}, {{{0, 1}, {-1, e}}}, {{{-1, e}, {0, -1}}}, {{{0, -1}, {1, 0}}}};
  } else if (name == "p3") {
    f.dim = 3;
    std::vector<std::vector<long>> rays{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    for (std::size_t skip = 0; skip < 4; ++skip) {
      Cone c;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != skip) c.generators.push_back(rays[i]);
      f.max_cones.push_back(std::move(c));
    }
  } else {
    throw PreconditionError("unknown standard fan " + name);
  }
  return f;
}

namespace {

mpz_class det_mpz(std::vector<std::vector<mpz_class>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<mpz_class>> widen(const SmallMatrix& m) {
  std::vector<std::vector<mpz_class>> w;
  for (const auto& row : m) w.emplace_back(row.begin(), row.end());
  return w;
}

long gcd_row(const std::vector<long>& row) {
  long g = 0;
  for (long v : row) g = std::gcd(g, v);
  return g;
}

}  // namespace

long det(const SmallMatrix& m) {
  mpz_class d = det_mpz(widen(m));
  if (!d.fits_slong_p()) throw PreconditionError("det: value exceeds 64 bits");
  return d.get_si();
}

SmallMatrix dual_basis(const SmallMatrix& g) {
  const std::size_t d = g.size();
  long dg = det(g);
  if (dg != 1 && dg != -1) throw FanError("dual_basis: generator matrix is not unimodular (det " + std::to_string(dg) + ")");
  // K = (G^{-1})^T = cof(G) / det(G)
  SmallMatrix k(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SmallMatrix minor;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == i) continue;
        std::vector<long> row;
        for (std::size_t c = 0; c < d; ++c)
          if (c != j) row.push_back(g[r][c]);
        minor.push_back(std::move(row));
      }
      long cof = ((i + j) % 2 == 0 ? 1 : -1) * det(minor);
      k[i][j] = cof * dg;
    }
  }
  return k;
}

FanCertificate check_fan(const Fan& fan) {
  FanCertificate c;
  c.N = fan.max_cones.size();
  const std::size_t d = static_cast<std::size_t>(std::max(fan.dim, 0));
  auto fail = [&c](const std::string& what, const std::string& detail) {
    if (c.failure.empty()) {
      c.failure = what;
      c.detail = detail;
    }
  };
  if (fan.dim < 1) {
    fail("dimension", "dimension must be at least 1");
    return c;
  }
  for (std::size_t p = 0; p < c.N; ++p) {
    const auto& g = fan.max_cones[p].generators;
    ConeCheck cc;
    bool shape = g.size() == d && std::all_of(g.begin(), g.end(), [d](const auto& r) { return r.size() == d; });
    if (!shape) {
      fail("dimension", "cone " + std::to_string(p) + " is not a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
      c.cones.push_back(cc);
      continue;
    }
    cc.primitive = std::all_of(g.begin(), g.end(), [](const auto& r) { return gcd_row(r) == 1; });
    cc.det = det(g);
    if (!cc.primitive) fail("non_primitive_ray", "cone " + std::to_string(p) + " has a non-primitive generator");
    if (cc.det != 1 && cc.det != -1) fail("determinant", "cone " + std::to_string(p) + " has det " + std::to_string(cc.det));
    c.cones.push_back(cc);
  }
  c.smooth = c.failure.empty();
  if (!c.smooth) return c;
  if (c.N < d + 1) {
    fail("too_few_cones", "a complete fan in dimension " + std::to_string(d) + " needs at least " + std::to_string(d + 1) + " cones");
    return c;
  }
  // facet -> (cone, dropped ray)
  std::map<std::vector<std::vector<long>>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t p = 0; p < c.N; ++p) {
    const auto& g = fan.max_cones[p].generators;
    for (std::size_t drop = 0; drop < d; ++drop) {
      std::vector<std::vector<long>> key;
      for (std::size_t i = 0; i < d; ++i)
        if (i != drop) key.push_back(g[i]);
      std::sort(key.begin(), key.end());
      facets[key].push_back({p, drop});
    }
  }
  c.facets = facets.size();
  std::vector<std::vector<std::size_t>> adj(c.N);
  for (const auto& [key, users] : facets) {
    if (users.size() != 2) {
      fail("unpaired_facet", "a facet lies in " + std::to_string(users.size()) + " maximal cones");
      return c;
    }
    // facet rays followed by the opposite ray, in one fixed order for both cones
    auto side = [&](const std::pair<std::size_t, std::size_t>& u) {
      SmallMatrix m = key;
      m.push_back(fan.max_cones[u.first].generators[u.second]);
      return det(m);
    };
    long s0 = side(users[0]), s1 = side(users[1]);
    if ((s0 > 0) == (s1 > 0)) {
      fail("same_side", "cones " + std::to_string(users[0].first) + " and " + std::to_string(users[1].first) +
                            " lie on the same side of a shared facet");
      return c;
    }
    adj[users[0].first].push_back(users[1].first);
    adj[users[1].first].push_back(users[0].first);
  }
  std::vector<bool> seen(c.N, false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    std::size_t p = todo.front();
    todo.pop();
    for (std::size_t q : adj[p]) {
      if (!seen[q]) {
        seen[q] = true;
        ++reached;
        todo.push(q);
      }
    }
  }
  if (reached != c.N) {
    fail("disconnected", "facet adjacency graph reaches " + std::to_string(reached) + " of " + std::to_string(c.N) + " cones");
    return c;
  }
  // a generic vector lies in the interior of exactly one cone
  auto duals = dual_bases(fan);
  std::size_t probes = 0;
  for (long t = 1; t < 200 && probes < 3; ++t) {
    std::vector<mpz_class> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = mpz_class(1000003) * ((t * 7919 + static_cast<long>(i) * 104729) % 2003 - 1001) + t * static_cast<long>(i + 1);
    std::size_t inside = 0;
    bool boundary = false;
    for (const auto& K : duals) {
      bool all_pos = true;
      for (std::size_t i = 0; i < d; ++i) {
        mpz_class l = 0;
        for (std::size_t j = 0; j < d; ++j) l += K[i][j] * v[j];
        if (l == 0) boundary = true;
        if (l <= 0) all_pos = false;
      }
      if (all_pos) ++inside;
    }
    if (boundary) continue;
    ++probes;
    if (inside != 1) {
      fail("covering", "a generic vector lies in " + std::to_string(inside) + " maximal cones");
      return c;
    }
  }
  c.complete = true;
  return c;
}

void require_valid(const Fan& fan) {
  FanCertificate c = check_fan(fan);
  if (!c.valid()) throw FanError(c.failure + ": " + c.detail);
}

std::vector<SmallMatrix> dual_bases(const Fan& fan) {
  std::vector<SmallMatrix> out;
  for (const auto& c : fan.max_cones) out.push_back(dual_basis(c.generators));
  return out;
}

std::vector<long> exponent_image(const SmallMatrix& K, const std::vector<long>& r) {
  if (K.size() != r.size()) throw PreconditionError("exponent_image: dimension mismatch");
  std::vector<long> s(K.empty() ? 0 : K[0].size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) s[j] += r[i] * K[i][j];
  return s;
}

std::vector<RealBall> eigen_arguments(const SmallMatrix& K, const std::vector<RealBall>& theta) {
  std::vector<RealBall> out;
  for (const auto& row : K) {
    if (row.size() != theta.size()) throw PreconditionError("eigen_arguments: dimension mismatch");
    Bits p = 64;
    for (const auto& t : theta) p = std::max(p, t.precision());
    RealBall s(p);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) s = s + RealBall::exact(mpz_class(row[j]), p) * theta[j];
    out.push_back(frac(s));
  }
  return out;
}

IndependenceEvidence audit_independence(const TorusElement& a, long bound, Bits precision_bits) {
  return {relation_search(a.arguments, bound, precision_bits), "relation audit"};
}

std::vector<ToricFixedPoint> fixed_points(const Fan& fan, const TorusElement& a, const IndependenceEvidence& evidence) {
  require_valid(fan);
  if (a.arguments.size() != static_cast<std::size_t>(fan.dim))
    throw PreconditionError("fixed_points: torus element has the wrong dimension");
  if (evidence.audit.outcome != RelationOutcome::NoRelationFound)
    throw PreconditionError("fixed_points: coordinates not certified multiplicatively independent (" +
                            to_string(evidence.audit.outcome) + ")");
  if (evidence.audit.arguments.size() != a.arguments.size())
    throw PreconditionError("fixed_points: evidence covers different coordinates");
  for (std::size_t i = 0; i < a.arguments.size(); ++i) {
    if (!evidence.audit.arguments[i].overlaps(a.arguments[i]))
      throw PreconditionError("fixed_points: evidence covers different coordinates");
  }
  std::vector<ToricFixedPoint> out;
  auto duals = dual_bases(fan);
  for (std::size_t p = 0; p < duals.size(); ++p) out.push_back({p, duals[p], eigen_arguments(duals[p], a.arguments)});
  return out;
}

nlohmann::json to_json(const FanCertificate& c) {
  nlohmann::json cones = nlohmann::json::array();
  for (const auto& k : c.cones) cones.push_back({{"primitive", k.primitive}, {"det", k.det}});
  nlohmann::json j{{"smooth", c.smooth}, {"complete", c.complete}, {"N", c.N}, {"facets", c.facets}, {"cones", cones}};
  if (!c.failure.empty()) j["failure"] = {{"condition", c.failure}, {"detail", c.detail}};
  return j;
}

}  // namespace salemforge
