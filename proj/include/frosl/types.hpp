#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace frosl {

using Complex = std::complex<double>;

// Ordered set of interior points 0 < a_1 < ... < a_n < pi at which the
// solution value enters the equation nonlocally.
class FrozenArguments {
 public:
  explicit FrozenArguments(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  int n() const { return static_cast<int>(points_.size()); }
  double operator[](int i) const { return points_[static_cast<size_t>(i)]; }

  // G(rho) = sum_i sin(rho * a_i); its values at positive integers gate
  // mode recoverability.
  double G(double rho) const;

 private:
  std::vector<double> points_;
};

// Principal square root: rho^2 = lambda, Re(rho) >= 0, ties broken toward
// Im(rho) >= 0 so that negative real lambda maps onto the positive
// imaginary axis.
Complex principal_rho(Complex lambda);

// sin(rho*x)/rho, entire in lambda = rho^2.  For |rho*x| < 1e-4 the Taylor
// form x - rho^2 x^3/6 + rho^4 x^5/120 is used; the direct quotient loses
// all significance as rho -> 0.
Complex sinc_kernel(Complex rho, double x);

inline constexpr double kSincSeriesCutoff = 1e-4;

// One eigenvalue; rho is cached alongside lambda since all root work
// happens in the rho plane.
struct SpectralPoint {
  Complex lambda;
  Complex rho;
  int multiplicity = 1;
  bool low_precision = false;

  static SpectralPoint from_lambda(Complex lam);
  static SpectralPoint from_rho(Complex r);
  bool is_real(double tol = 1e-10) const;
};

// Eigenvalues sorted by (Re lambda, Im lambda), closed under conjugation
// for real potentials.  Indexing is 1-based by sorted order.
struct Spectrum {
  std::vector<SpectralPoint> eigenvalues;
  int m_max = 0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  const SpectralPoint& at(int m) const {  // 1-based
    return eigenvalues.at(static_cast<size_t>(m - 1));
  }
  void sort_and_index();
  bool conjugate_closed(double tol = 1e-10) const;
};

// Coefficients of q in the basis sin m(pi - t), m = 1..M.  Signs differ
// from the plain sin(mt) basis at even m, so all coefficient I/O sticks
// to this one.
struct SineCoefficients {
  std::vector<double> d;  // d[m-1] is the coefficient of sin m(pi - t)

  int modes() const { return static_cast<int>(d.size()); }
};

}  // namespace frosl
