#pragma once

#include <complex>

#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// integral_0^x q(t) sin(rho(x-t))/rho dt by composite Simpson.  The node
// count is deterministic in (x, rho, q): at least 16 nodes per oscillation
// period (frequency proxy |Re rho| + |Im rho| plus the potential's own
// hint), at least 257 nodes, and enough to push the h^4 Simpson error
// below ~1e-12 at the scales the root search visits (|rho| <= ~35).
Complex integrate_q_osc(const Potential& q, double x, Complex rho);

// Node-count rule, exposed for tests.
int simpson_intervals(double length, double freq, double q_max, double q_freq);

}  // namespace frosl
