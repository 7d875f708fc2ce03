#pragma once

#include <string>

#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// Constant expressions for frozen points: decimal literals, pi, sqrt(k),
// products and one quotient ("2pi/3", "pi/2", "0.5*sqrt(2)").
double parse_real_expr(const std::string& text);

// Comma-separated list of the above.
FrozenArguments parse_frozen(const std::string& text);

// Potentials: "zero", or a +/- separated sum of terms
//   c | c*t^k | c*cos(k t) | c*sin(k t)
// e.g. "1-cos(2t)", "t", "0.5t^2+1", "sin(3t)".  Mixed polynomial and
// trig terms are rejected (no closed form covers both).
Potential parse_potential_expr(const std::string& text, int grid_points);

}  // namespace frosl
