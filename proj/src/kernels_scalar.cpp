#include <cmath>
#include <complex>

#include "frosl/kernels.hpp"

// Reference kernels.  These are the semantics the AVX2 variants are
// equivalence-tested against, so keep them dead simple.

namespace frosl::kern {
namespace {

using Complex = std::complex<double>;

constexpr double kCutoff = 1e-4;  // |rho*dt| below which the series is used

inline Complex sinc_node(Complex rho, double x) {
  const Complex z = rho * x;
  if (std::abs(z) < kCutoff) {
    const Complex r2 = rho * rho;
    return x - r2 * (x * x * x) / 6.0 + r2 * r2 * (x * x * x * x * x) / 120.0;
  }
  return std::sin(z) / rho;
}

Complex osc_sum_scalar(const double* c, const double* dt, std::size_t n,
                       Complex rho) {
  if (rho.imag() == 0.0) {
    // Real rho: everything stays real.
    const double r = rho.real();
    double acc = 0.0;
    if (r == 0.0) {
      for (std::size_t i = 0; i < n; ++i) acc += c[i] * dt[i];
      return Complex(acc, 0.0);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double z = r * dt[i];
      double k;
      if (std::abs(z) < kCutoff) {
        const double x = dt[i];
        k = x - r * r * (x * x * x) / 6.0 +
            r * r * r * r * (x * x * x * x * x) / 120.0;
      } else {
        k = std::sin(z) / r;
      }
      acc += c[i] * k;
    }
    return Complex(acc, 0.0);
  }
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += c[i] * sinc_node(rho, dt[i]);
  return acc;
}

void sine_series_scalar(const double* d, std::size_t modes, const double* t,
                        double* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double u = M_PI - t[j];
    double acc = 0.0;
    for (std::size_t m = 1; m <= modes; ++m)
      acc += d[m - 1] * std::sin(static_cast<double>(m) * u);
    out[j] = acc;
  }
}

}  // namespace

namespace detail {

const Ops& scalar_ops() {
  static const Ops ops{&osc_sum_scalar, &sine_series_scalar};
  return ops;
}

}  // namespace detail
}  // namespace frosl::kern
