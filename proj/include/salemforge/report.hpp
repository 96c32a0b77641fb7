#pragma once

// JSON rendering of certified numbers: decimal strings with a radius sibling.

#include <nlohmann/json.hpp>

#include "salemforge/ball.hpp"

namespace salemforge {

// {"mid": "...", "radius": "..."}
nlohmann::json ball_json(const RealBall& x);
// {"re": "...", "im": "...", "radius": "..."}
nlohmann::json ball_json(const ComplexBall& z);

RealBall real_ball_from_json(const nlohmann::json& j, Bits prec);
ComplexBall complex_ball_from_json(const nlohmann::json& j, Bits prec);

}  // namespace salemforge
