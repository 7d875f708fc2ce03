#include "frosl/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "frosl/kernels.hpp"
#include "frosl/quadrature.hpp"

namespace frosl {

SineCoefficients sine_coefficients(const Potential& q, int M) {
  if (M < 1) throw std::invalid_argument("sine_coefficients: M >= 1 required");
  SineCoefficients out;
  out.d.resize(static_cast<size_t>(M));
  for (int m = 1; m <= M; ++m) {
    // integral of q sin(m(pi-t)) = m * integral of q sin(m(pi-t))/m
    const Complex v = integrate_q_osc(q, M_PI, Complex(double(m), 0.0));
    out.d[static_cast<size_t>(m - 1)] = (2.0 / M_PI) * double(m) * v.real();
  }
  return out;
}

std::vector<double> synthesize(const SineCoefficients& d,
                               std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("synthesize: empty grid");
  for (double t : grid)
    if (t < 0.0 || t > M_PI)
      throw std::invalid_argument("synthesize: grid point outside [0, pi]");
  std::vector<double> out(grid.size(), 0.0);
  if (!d.d.empty())
    kern::sine_series(d.d.data(), d.d.size(), grid.data(), out.data(),
                      grid.size());
  return out;
}

std::vector<double> uniform_grid(int n) {
  std::vector<double> g(static_cast<size_t>(n));
  const double h = M_PI / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = i * h;
  g.back() = M_PI;
  return g;
}

Potential synthesize_potential(const SineCoefficients& d, int grid_points) {
  TrigForm form;
  form.sin_coeff.resize(d.d.size(), 0.0);
  // sin m(pi - t) = (-1)^{m+1} sin(mt)
  for (size_t m = 1; m <= d.d.size(); ++m)
    form.sin_coeff[m - 1] = (m % 2 == 1 ? 1.0 : -1.0) * d.d[m - 1];
  return Potential(std::move(form), grid_points);
}

}  // namespace frosl
