#include "frosl/types.hpp"

#include <algorithm>
#include <cmath>

#include "frosl/errors.hpp"

namespace frosl {

FrozenArguments::FrozenArguments(std::vector<double> points)
    : points_(std::move(points)) {
  if (points_.empty())
    throw std::invalid_argument("frozen arguments: need n >= 1 points");
  const double pi = M_PI;
  double prev = 0.0;
  for (double a : points_) {
    if (!(a > prev))
      throw std::invalid_argument(
          "frozen arguments: points must be strictly increasing in (0, pi)");
    if (!(a < pi))
      throw std::invalid_argument("frozen arguments: points must be < pi");
    prev = a;
  }
}

double FrozenArguments::G(double rho) const {
  double g = 0.0;
  for (double a : points_) g += std::sin(rho * a);
  return g;
}

Complex principal_rho(Complex lambda) {
  Complex rho = std::sqrt(lambda);
  if (rho.real() < 0.0) rho = -rho;
  if (rho.real() == 0.0 && rho.imag() < 0.0) rho = -rho;
  return rho;
}

Complex sinc_kernel(Complex rho, double x) {
  const Complex z = rho * x;
  if (std::abs(z) < kSincSeriesCutoff) {
    const Complex r2 = rho * rho;
    return x - r2 * (x * x * x) / 6.0 + r2 * r2 * (x * x * x * x * x) / 120.0;
  }
  return std::sin(z) / rho;
}

SpectralPoint SpectralPoint::from_lambda(Complex lam) {
  return SpectralPoint{lam, principal_rho(lam)};
}

SpectralPoint SpectralPoint::from_rho(Complex r) {
  return SpectralPoint{r * r, r};
}

bool SpectralPoint::is_real(double tol) const {
  return std::abs(lambda.imag()) <= tol * (1.0 + std::abs(lambda));
}

void Spectrum::sort_and_index() {
  std::sort(eigenvalues.begin(), eigenvalues.end(),
            [](const SpectralPoint& a, const SpectralPoint& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() < b.lambda.real();
              return a.lambda.imag() < b.lambda.imag();
            });
}

bool Spectrum::conjugate_closed(double tol) const {
  for (const auto& p : eigenvalues) {
    if (p.is_real(tol)) continue;
    const Complex want = std::conj(p.lambda);
    bool found = false;
    for (const auto& q : eigenvalues) {
      if (std::abs(q.lambda - want) <= tol * (1.0 + std::abs(want))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace frosl
