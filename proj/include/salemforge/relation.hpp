#pragma once

// Integer relation search among arguments theta_i (turns, in [0, 1)): finds
// small m with sum m_i theta_i in Z, or certifies that none exists with
// |m_i| <= bound, via LLL on the scaled-argument lattice.

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "salemforge/ball.hpp"
#include "salemforge/errors.hpp"

namespace salemforge {

class PrecisionTooLow : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

// Arguments recomputed at (at least) the requested precision.
using ArgumentProvider = std::function<std::vector<RealBall>(Bits)>;

enum class RelationOutcome { NoRelationFound, Candidate, Inconclusive };

std::string to_string(RelationOutcome o);

struct RelationReport {
  std::vector<RealBall> arguments;
  long bound = 0;
  Bits precision_bits = 0;
  RelationOutcome outcome = RelationOutcome::Inconclusive;
  std::vector<long> exponents;  // Candidate only
  RealBall residual;            // Candidate: distance of sum m_i theta_i to Z
  RealBall verified_residual;   // Candidate: same at doubled precision
  RealBall gap;                 // lower bound on that distance for every |m_i| <= bound
  long discarded_candidates = 0;
  std::string note;
};

inline constexpr long kDefaultRelationBound = 32;

RelationReport relation_search(const ArgumentProvider& provider, long bound, Bits precision_bits, long lll_num = 99,
                               long lll_den = 100);

// Fixed arguments; they should carry 2 * precision_bits bits for the
// re-verification step to be meaningful.
RelationReport relation_search(const std::vector<RealBall>& arguments, long bound, Bits precision_bits);

// Distance of sum m_i theta_i to the nearest integer.
RealBall relation_residual(const std::vector<RealBall>& arguments, const std::vector<long>& m);

nlohmann::json to_json(const RelationReport& r);

}  // namespace salemforge
