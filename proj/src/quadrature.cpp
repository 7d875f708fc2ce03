#include "frosl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "frosl/kernels.hpp"

namespace frosl {

int simpson_intervals(double length, double freq, double q_max, double q_freq) {
  if (length <= 0.0) return 0;
  const double f_tot = freq + q_freq;
  // >= 16 nodes per period of the combined oscillation
  const double per_period = length * f_tot * 16.0 / (2.0 * M_PI);
  // h^4 error target: (len/180) h^4 M4 <= tol with M4 ~ Q (f+2)^3 * margin
  const double tol = 1e-12 * (1.0 + length * std::max(q_max, 1.0));
  const double m4 = std::max(q_max, 1.0) * std::pow(f_tot + 2.0, 3.0) * 8.0;
  const double h_target =
      std::pow(180.0 * tol / (length * m4), 0.25);
  const double by_error = length / h_target;
  double n = std::max({256.0, per_period, by_error});
  n = std::min(n, 4.0e6);  // hard cap
  int ni = static_cast<int>(std::ceil(n));
  if (ni % 2 != 0) ++ni;
  return ni;
}

Complex integrate_q_osc(const Potential& q, double x, Complex rho) {
  if (x <= 0.0) return Complex(0.0, 0.0);
  if (q.max_abs() == 0.0) return Complex(0.0, 0.0);

  const double freq = std::abs(rho.real()) + std::abs(rho.imag());
  const int n = simpson_intervals(x, freq, q.max_abs(), q.freq_hint());
  const double h = x / n;

  thread_local std::vector<double> coeff;
  thread_local std::vector<double> dt;
  coeff.resize(static_cast<size_t>(n) + 1);
  dt.resize(static_cast<size_t>(n) + 1);

  const double w_edge = h / 3.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    double w;
    if (i == 0 || i == n)
      w = w_edge;
    else if (i % 2 == 1)
      w = 4.0 * w_edge;
    else
      w = 2.0 * w_edge;
    coeff[static_cast<size_t>(i)] = w * q.value_at(t);
    dt[static_cast<size_t>(i)] = x - t;
  }
  return kern::osc_sum(coeff.data(), dt.data(), coeff.size(), rho);
}

}  // namespace frosl
