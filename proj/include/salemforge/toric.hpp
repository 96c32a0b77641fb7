#pragma once

// Complete nonsingular fans, dual bases of their maximal cones, and the fixed
// points of torus elements with their linearized eigenvalues.

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "salemforge/ball.hpp"
#include "salemforge/relation.hpp"

namespace salemforge {

using SmallMatrix = std::vector<std::vector<long>>;

struct Cone {
  SmallMatrix generators;  // rows are primitive ray generators
};

struct Fan {
  int dim = 0;
  std::vector<Cone> max_cones;
  std::string name;
};

Fan fan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Fan& f);
Fan load_fan(const std::string& path);

// Named fans: "plane", "line", "p1xp1", "p3", and "hirzebruch<e>".
Fan standard_fan(const std::string& name);

struct ConeCheck {
  bool primitive = false;
  long det = 0;
};

struct FanCertificate {
  std::size_t N = 0;
  std::vector<ConeCheck> cones;
  bool smooth = false;
  bool complete = false;
  std::size_t facets = 0;
  // first violated condition: "", "dimension", "non_primitive_ray", "determinant",
  // "too_few_cones", "unpaired_facet", "same_side", "disconnected", "covering"
  std::string failure;
  std::string detail;

  bool valid() const { return failure.empty(); }
};

FanCertificate check_fan(const Fan& fan);
// Throws FanError naming the first violated condition.
void require_valid(const Fan& fan);

long det(const SmallMatrix& m);
// Inverse transpose of a unimodular matrix.
SmallMatrix dual_basis(const SmallMatrix& generators);
std::vector<SmallMatrix> dual_bases(const Fan& fan);

// s = r K
std::vector<long> exponent_image(const SmallMatrix& K, const std::vector<long>& r);

struct TorusElement {
  std::vector<RealBall> arguments;        // a_i = exp(2 pi i theta_i)
  std::vector<std::string> provenance;    // per coordinate
};

// Multiplicative independence of the coordinates of a torus element.
struct IndependenceEvidence {
  RelationReport audit;
  std::string source;
};

IndependenceEvidence audit_independence(const TorusElement& a, long bound, Bits precision_bits);

struct ToricFixedPoint {
  std::size_t cone = 0;
  SmallMatrix K;
  std::vector<RealBall> eigen_arguments;  // (K theta)_i mod 1
};

// Eigenvalue arguments at every fixed point. Refuses unless the evidence is a
// NoRelationFound audit of exactly these coordinates.
std::vector<ToricFixedPoint> fixed_points(const Fan& fan, const TorusElement& a, const IndependenceEvidence& evidence);

// (K theta)_i mod 1
std::vector<RealBall> eigen_arguments(const SmallMatrix& K, const std::vector<RealBall>& theta);

nlohmann::json to_json(const FanCertificate& c);

}  // namespace salemforge
