#pragma once

// Product automorphisms built from McMullen pairs and at most one toric
// factor: fixed points, their classification, and entropy.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "salemforge/mau.hpp"
#include "salemforge/toric.hpp"

namespace salemforge {

struct McMullenFactor {
  unsigned long n = 0;
  std::optional<std::size_t> delta_index;  // must match the MAU certificate when given
  int branch = 1;
};

struct ToricFactor {
  Fan fan;
};

using Factor = std::variant<McMullenFactor, ToricFactor>;

// McMullen factors take the two entries of their source n; the toric factor
// takes all remaining entries in sequence order.
struct ProductSpec {
  std::vector<Factor> factors;
  MAUSequence mau;
};

struct FactorBinding {
  std::vector<std::size_t> entries;  // indices into mau.entries
  const ExtensionCertificate* certificate = nullptr;  // McMullen only
  std::vector<SmallMatrix> K;                         // toric only
};

// Throws PreconditionError if the factors do not consume the MAU exactly once.
std::vector<FactorBinding> bind_factors(const ProductSpec& spec);

enum class Classification { SiegelArithmetic, NonSiegel, Undetermined };

std::string to_string(Classification c);

struct AddressPart {
  enum class Kind { P, Q, cone };
  Kind kind = Kind::Q;
  std::size_t cone = 0;
};

std::string to_string(const AddressPart& a);

struct FixedPoint {
  std::vector<AddressPart> address;
  std::vector<RealBall> eigen_arguments;  // P components contribute nothing
  std::vector<std::string> eigen_labels;
  std::vector<NamedCheck> checks;         // on-circle and integrality of every modeled eigenvalue
};

struct FixedPointReport {
  FixedPoint point;
  Classification classification = Classification::Undetermined;
  std::optional<RelationReport> audit;
  std::string fatal_flag;
  std::optional<Bits> suggested_bits;
  std::string hint;
};

// Cartesian product in factor order, last factor fastest; P before Q.
std::vector<FixedPoint> enumerate_fixed_points(const ProductSpec& spec);

FixedPointReport classify(const FixedPoint& fp, long bound, Bits precision_bits);

struct SiegelCount {
  std::size_t count = 0;
  std::size_t nonsiegel = 0;
  std::size_t undetermined = 0;
  std::vector<FixedPointReport> reports;
};

SiegelCount siegel_count(const ProductSpec& spec, long bound, Bits precision_bits);

struct ProductEntropy {
  RealBall value;
  std::vector<RealBall> contributions;  // per factor, toric factors 0
  bool certified_positive = false;
  std::vector<std::string> warnings;
};

ProductEntropy product_entropy(const ProductSpec& spec);

// {"factors": [...], "mau": path | MAU JSON | {"length": L, "k0": k, "truncate": m}}
// Relative paths resolve against base_dir.
ProductSpec product_spec_from_json(const nlohmann::json& j, const std::string& base_dir, Bits precision_bits,
                                   long bound);
ProductSpec load_product_spec(const std::string& path, Bits precision_bits, long bound);

nlohmann::json to_json(const FixedPointReport& r);
nlohmann::json to_json(const SiegelCount& c);
nlohmann::json to_json(const ProductEntropy& e);

}  // namespace salemforge
