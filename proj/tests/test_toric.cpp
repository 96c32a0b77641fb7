#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "salemforge/errors.hpp"
#include "salemforge/toric.hpp"

using namespace salemforge;

namespace {

const std::string kFans = std::string(SALEMFORGE_DATA_DIR) + "/fans/";

Fan make(int dim, std::vector<SmallMatrix> cones) {
  Fan f;
  f.dim = dim;
  for (auto& c : cones) f.max_cones.push_back({std::move(c)});
  return f;
}

std::vector<Fan> shipped() {
  std::vector<Fan> out;
  for (const char* n : {"plane", "line", "p1xp1", "hirzebruch1", "p3"}) out.push_back(load_fan(kFans + n + ".json"));
  for (int e = 0; e <= 3; ++e) out.push_back(standard_fan("hirzebruch" + std::to_string(e)));
  return out;
}

TorusElement independent_pair() {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(42);
  TorusElement a;
  for (int i = 0; i < 2; ++i) {
    mpz_class z = rng.get_z_bits(1000);
    a.arguments.push_back(RealBall::exact(z, 1100) / RealBall::exact(mpz_class(1) << 1000, 1100));
    a.provenance.push_back("random");
  }
  return a;
}

}  // namespace

TEST_CASE("shipped fans are smooth and complete") {
  CHECK(check_fan(load_fan(kFans + "plane.json")).N == 3);
  CHECK(check_fan(load_fan(kFans + "p1xp1.json")).N == 4);
  CHECK(check_fan(load_fan(kFans + "p3.json")).N == 4);
  CHECK(check_fan(load_fan(kFans + "line.json")).N == 2);
  for (const Fan& f : shipped()) {
    FanCertificate c = check_fan(f);
    CAPTURE(f.name);
    CHECK(c.valid());
    CHECK(c.smooth);
    CHECK(c.complete);
  }
  CHECK(check_fan(standard_fan("p3")).facets == 6);
}

TEST_CASE("named failures") {
  FanCertificate c = check_fan(make(2, {{{1, 0}, {1, 2}}, {{1, 2}, {-1, -1}}, {{-1, -1}, {1, 0}}}));
  CHECK(c.failure == "determinant");
  CHECK(c.cones[0].det == 2);
  CHECK_FALSE(c.smooth);

  CHECK(check_fan(make(2, {{{2, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {2, 0}}})).failure == "non_primitive_ray");
  CHECK(check_fan(make(2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}})).failure == "too_few_cones");
  CHECK(check_fan(make(2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}, {{-1, 0}, {0, -1}}})).failure == "unpaired_facet");
  CHECK(check_fan(make(2, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}})).failure == "same_side");
  CHECK(check_fan(make(2, {{{1, 0}, {0, 1}},
                           {{0, 1}, {-1, -1}},
                           {{-1, -1}, {1, 0}},
                           {{-1, 0}, {0, -1}},
                           {{0, -1}, {1, 1}},
                           {{1, 1}, {-1, 0}}}))
            .failure == "disconnected");
  // winds twice around the origin
  CHECK(check_fan(make(2, {{{1, 0}, {0, 1}},
                           {{0, 1}, {-1, -1}},
                           {{-1, -1}, {2, 1}},
                           {{2, 1}, {-1, 0}},
                           {{-1, 0}, {1, -1}},
                           {{1, -1}, {1, 0}}}))
            .failure == "covering");
  CHECK(check_fan(make(2, {{{1, 0, 0}, {0, 1}}})).failure == "dimension");
  CHECK(check_fan(make(0, {})).failure == "dimension");
  CHECK_THROWS_AS(require_valid(make(2, {{{1, 0}, {0, 1}}})), FanError);
}

TEST_CASE("dual bases") {
  SmallMatrix id{{1, 0}, {0, 1}};
  CHECK(dual_basis(id) == id);
  SmallMatrix g{{0, 1}, {-1, -1}};
  SmallMatrix k = dual_basis(g);
  CHECK(std::labs(det(k)) == 1);
  for (const Fan& f : shipped()) {
    auto ks = dual_bases(f);
    for (std::size_t p = 0; p < ks.size(); ++p) {
      const SmallMatrix& G = f.max_cones[p].generators;
      const SmallMatrix& K = ks[p];
      std::size_t d = G.size();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          long s = 0;
          for (std::size_t t = 0; t < d; ++t) s += G[i][t] * K[j][t];
          CHECK(s == (i == j ? 1 : 0));
        }
      CHECK(std::labs(det(K)) == 1);
    }
  }
  CHECK_THROWS_AS(dual_basis(SmallMatrix{{1, 0}, {1, 2}}), FanError);
}

TEST_CASE("planar fans fill the full angle") {
  for (const Fan& f : shipped()) {
    if (f.dim != 2) continue;
    double total = 0;
    for (const auto& c : f.max_cones) {
      const auto& u = c.generators[0];
      const auto& v = c.generators[1];
      double cross = static_cast<double>(u[0] * v[1] - u[1] * v[0]);
      double dotp = static_cast<double>(u[0] * v[0] + u[1] * v[1]);
      total += std::fabs(std::atan2(cross, dotp));
    }
    CHECK(std::fabs(total - 2 * std::numbers::pi) < std::ldexp(1.0, -40));
  }
}

TEST_CASE("exponent images") {
  SmallMatrix id{{1, 0}, {0, 1}};
  CHECK(exponent_image(id, {0, 0}) == std::vector<long>{0, 0});
  CHECK(exponent_image(id, {3, -1}) == std::vector<long>{3, -1});
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> c(-10, 10);
  for (const Fan& f : shipped())
    for (const auto& K : dual_bases(f))
      for (int t = 0; t < 50; ++t) {
        std::vector<long> r(K.size());
        for (auto& x : r) x = c(rng);
        if (std::all_of(r.begin(), r.end(), [](long x) { return x == 0; })) continue;
        auto s = exponent_image(K, r);
        CHECK(std::any_of(s.begin(), s.end(), [](long x) { return x != 0; }));
      }
}

TEST_CASE("fixed points of an independent torus element") {
  Fan plane = standard_fan("plane");
  TorusElement a = independent_pair();
  IndependenceEvidence ev = audit_independence(a, 32, 512);
  REQUIRE(ev.audit.outcome == RelationOutcome::NoRelationFound);
  auto pts = fixed_points(plane, a, ev);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].eigen_arguments[0].overlaps(a.arguments[0]));
  CHECK(pts[0].eigen_arguments[1].overlaps(a.arguments[1]));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-10, 10);
  for (const auto& p : pts) {
    CHECK(relation_search(p.eigen_arguments, 10, 256).outcome == RelationOutcome::NoRelationFound);
    // a local relation r is the global relation s = r K
    for (int t = 0; t < 50; ++t) {
      std::vector<long> r{c(rng), c(rng)};
      if (r[0] == 0 && r[1] == 0) continue;
      std::vector<long> s = exponent_image(p.K, r);
      RealBall local = relation_residual(p.eigen_arguments, r);
      CHECK(local.overlaps(relation_residual(a.arguments, s)));
      if (std::labs(s[0]) <= 32 && std::labs(s[1]) <= 32) CHECK(cmp(local.lower(), ev.audit.gap.lower()) >= 0);
    }
    for (const auto& t : p.eigen_arguments) {
      CHECK(!t.is_negative());
      CHECK(cmp(t.mid(), Real(1.0, 64)) < 0);
    }
  }
}

TEST_CASE("fixed points require independence") {
  Fan plane = standard_fan("plane");
  TorusElement trivial{{RealBall::exact(mpz_class(0), 1100), RealBall::exact(mpz_class(0), 1100)}, {"1", "1"}};
  IndependenceEvidence ev = audit_independence(trivial, 32, 512);
  CHECK(ev.audit.outcome == RelationOutcome::Candidate);
  CHECK_THROWS_AS(fixed_points(plane, trivial, ev), PreconditionError);

  TorusElement a = independent_pair();
  IndependenceEvidence none;
  CHECK_THROWS_AS(fixed_points(plane, a, none), PreconditionError);
  IndependenceEvidence other = audit_independence(independent_pair(), 32, 512);
  other.audit.arguments[0] = RealBall::rational(1, 5, 1100);
  CHECK_THROWS_AS(fixed_points(plane, a, other), PreconditionError);
}

TEST_CASE("fan JSON") {
  Fan f = standard_fan("hirzebruch2");
  Fan back = fan_from_json(to_json(f));
  CHECK(back.dim == 2);
  CHECK(back.max_cones.size() == 4);
  CHECK(back.max_cones[1].generators == f.max_cones[1].generators);
  CHECK_THROWS_AS(load_fan(kFans + "missing.json"), PreconditionError);
  CHECK_THROWS_AS(standard_fan("p7"), PreconditionError);
}
