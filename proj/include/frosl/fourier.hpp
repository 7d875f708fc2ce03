#pragma once

#include <span>
#include <vector>

#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// d[m] = (2/pi) integral_0^pi q(t) sin m(pi-t) dt, m = 1..M
SineCoefficients sine_coefficients(const Potential& q, int M);

// qhat(t) = sum_{m=1}^{M} d[m] sin m(pi-t), pointwise on the grid
std::vector<double> synthesize(const SineCoefficients& d,
                               std::span<const double> grid);

// Convenience: synthesize on a uniform n-point grid and wrap as Potential.
Potential synthesize_potential(const SineCoefficients& d, int grid_points);

std::vector<double> uniform_grid(int n);

}  // namespace frosl
