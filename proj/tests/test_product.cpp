#include <doctest.h>

#include <nlohmann/json.hpp>

#include "salemforge/coxeter.hpp"
#include "salemforge/errors.hpp"
#include "salemforge/product.hpp"
#include "salemforge/roots.hpp"

using namespace salemforge;

namespace {

const MAUSequence& seq19() {
  static const MAUSequence s = mau_build_from(0, 4, 512);
  return s;
}

const MAUSequence& seq4() {
  static const MAUSequence s = mau_build(4, 512);
  return s;
}

ProductSpec s19_plane() { return {{McMullenFactor{19}, ToricFactor{standard_fan("plane")}}, seq19()}; }

std::string address(const FixedPointReport& r) {
  std::string s;
  for (const auto& a : r.point.address) s += to_string(a) + " ";
  return s;
}

}  // namespace

TEST_CASE("S(19) x plane") {
  SiegelCount c = siegel_count(s19_plane(), 32, 512);
  REQUIRE(c.reports.size() == 6);
  CHECK(c.count == 3);
  CHECK(c.nonsiegel == 3);
  CHECK(c.undetermined == 0);
  for (const auto& r : c.reports) {
    bool at_p = r.point.address[0].kind == AddressPart::Kind::P;
    CHECK(r.classification == (at_p ? Classification::NonSiegel : Classification::SiegelArithmetic));
    if (at_p) {
      CHECK_FALSE(r.fatal_flag.empty());
    } else {
      REQUIRE(r.audit.has_value());
      CHECK(r.audit->outcome == RelationOutcome::NoRelationFound);
      CHECK(r.point.eigen_arguments.size() == 4);
      for (const auto& ch : r.point.checks) CHECK(ch.passed);
    }
  }
  CHECK(address(c.reports[0]) == "P Q_1 ");
  CHECK(address(c.reports[5]) == "Q Q_3 ");
}

TEST_CASE("S(19) x line") {
  ProductSpec spec{{McMullenFactor{19}, ToricFactor{standard_fan("line")}}, truncate(seq19(), 3)};
  SiegelCount c = siegel_count(spec, 32, 512);
  CHECK(c.reports.size() == 4);
  CHECK(c.count == 2);
  CHECK(c.nonsiegel == 2);
  CHECK(c.undetermined == 0);
}

TEST_CASE("two McMullen factors") {
  ProductSpec spec{{McMullenFactor{739}, McMullenFactor{3259}}, seq4()};
  SiegelCount c = siegel_count(spec, 32, 512);
  REQUIRE(c.reports.size() == 4);
  CHECK(c.count == 1);
  CHECK(c.nonsiegel == 3);
  CHECK(address(c.reports[3]) == "Q Q ");
  CHECK(c.reports[3].classification == Classification::SiegelArithmetic);

  ProductEntropy e = product_entropy(spec);
  CHECK(e.certified_positive);
  RealBall sum = seq4().certificates[0].log_eta + seq4().certificates[1].log_eta;
  CHECK(e.value.overlaps(sum));
}

TEST_CASE("entropy of S(19) x plane") {
  ProductEntropy e = product_entropy(s19_plane());
  CHECK(e.certified_positive);
  CHECK(e.warnings.empty());
  EntropyValue direct = entropy_from_charpoly(en_from_formula(19) * IntPoly{-1, 1}, 256);
  RealBall diff = e.value - direct.value;
  CHECK(cmp(abs_upper(diff.mid()), rad_pow2(-80)) < 0);
  CHECK(diff.contains_zero());
}

TEST_CASE("entropy is additive") {
  ProductSpec both{{McMullenFactor{19}, McMullenFactor{739}}, seq19()};
  ProductSpec first{{McMullenFactor{19}}, truncate(seq19(), 2)};
  ProductSpec second{{McMullenFactor{739}}, mau_build_from(2, 2, 512)};
  RealBall sum = product_entropy(first).value + product_entropy(second).value;
  CHECK(product_entropy(both).value.overlaps(sum));
  SiegelCount c = siegel_count(both, 32, 512);
  CHECK(c.count == 1);
  CHECK(c.nonsiegel == 3);
}

TEST_CASE("pure toric and empty products") {
  ProductSpec toric{{ToricFactor{standard_fan("plane")}}, truncate(seq19(), 2)};
  ProductEntropy e = product_entropy(toric);
  CHECK(e.value.contains_zero());
  CHECK_FALSE(e.certified_positive);
  CHECK(e.warnings.size() == 1);
  SiegelCount c = siegel_count(toric, 32, 512);
  CHECK(c.reports.size() == 3);
  CHECK(c.count == 3);

  ProductSpec empty{{}, MAUSequence{}};
  auto pts = enumerate_fixed_points(empty);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].eigen_arguments.empty());
  CHECK(pts[0].address.empty());
  CHECK(product_entropy(empty).warnings.size() == 1);
}

TEST_CASE("reordering factors permutes fixed points") {
  SiegelCount a = siegel_count(s19_plane(), 32, 512);
  ProductSpec swapped{{ToricFactor{standard_fan("plane")}, McMullenFactor{19}}, seq19()};
  SiegelCount b = siegel_count(swapped, 32, 512);
  REQUIRE(a.reports.size() == b.reports.size());
  for (const auto& ra : a.reports) {
    std::size_t hits = 0;
    for (const auto& rb : b.reports) {
      if (to_string(ra.point.address[0]) == to_string(rb.point.address[1]) &&
          to_string(ra.point.address[1]) == to_string(rb.point.address[0])) {
        ++hits;
        CHECK(ra.classification == rb.classification);
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("insufficient numerics give Undetermined") {
  auto pts = enumerate_fixed_points(s19_plane());
  FixedPointReport hi = classify(pts.back(), 32, 4096);
  CHECK(hi.classification == Classification::Undetermined);
  CHECK(hi.suggested_bits.has_value());
  CHECK_FALSE(hi.hint.empty());
  FixedPointReport big = classify(pts.back(), 1000000000, 128);
  CHECK(big.classification == Classification::Undetermined);
  CHECK_FALSE(big.hint.empty());
  nlohmann::json j = to_json(big);
  CHECK(j.contains("remediation"));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(bind_factors({{McMullenFactor{43}}, seq19()}), PreconditionError);
  CHECK_THROWS_AS(bind_factors({{McMullenFactor{19}}, seq19()}), PreconditionError);
  CHECK_THROWS_AS(bind_factors({{McMullenFactor{19, std::nullopt, -1}, McMullenFactor{739}}, seq19()}), PreconditionError);
  std::size_t idx = seq19().certificates[0].delta_root_index;
  CHECK_NOTHROW(bind_factors({{McMullenFactor{19, idx, 1}, McMullenFactor{739}}, seq19()}));
  CHECK_THROWS_AS(bind_factors({{McMullenFactor{19, idx + 1, 1}, McMullenFactor{739}}, seq19()}), PreconditionError);
  CHECK_THROWS_AS(bind_factors({{McMullenFactor{19}, ToricFactor{standard_fan("p3")}}, seq19()}), PreconditionError);
  CHECK_THROWS_AS(
      bind_factors({{ToricFactor{standard_fan("line")}, ToricFactor{standard_fan("line")}}, seq19()}),
      PreconditionError);
}

TEST_CASE("spec files") {
  std::string dir = std::string(SALEMFORGE_DATA_DIR) + "/specs/";
  ProductSpec spec = load_product_spec(dir + "s19_plane.json", 512, 32);
  CHECK(spec.factors.size() == 2);
  CHECK(spec.mau.length() == 4);
  SiegelCount c = siegel_count(spec, 32, 512);
  CHECK(c.count == 3);
  nlohmann::json j = to_json(c);
  CHECK(j["siegel_count"] == 3);
  CHECK(j["fixed_points"].size() == 6);

  nlohmann::json inline_spec{{"factors", {{{"type", "mcmullen"}, {"n", 19}}, {{"type", "toric"}, {"standard_fan", "line"}}}},
                             {"mau", to_json(truncate(seq19(), 3))}};
  ProductSpec s2 = product_spec_from_json(inline_spec, "", 512, 32);
  CHECK(siegel_count(s2, 32, 512).count == 2);
  CHECK_THROWS_AS(product_spec_from_json(nlohmann::json{{"factors", nlohmann::json::array()}}, "", 256, 32),
                  PreconditionError);
  CHECK_THROWS_AS(load_product_spec(dir + "missing.json", 256, 32), PreconditionError);
}
