#pragma once

#include <vector>

#include "frosl/potential.hpp"
#include "frosl/spectrum.hpp"
#include "frosl/types.hpp"

namespace frosl {

// Delta evaluated by shooting: u'' + lambda u = 0 (u(0)=0, u'(0)=1) and
// v'' + lambda v = q (v(0)=v'(0)=0) integrated by classical RK4, then the
// sigma reduction applied to the node values.  No quadrature of the sine
// kernel anywhere on this route.
struct ShootingResult {
  std::vector<Complex> u;  // node values, step h over [0, pi]
  std::vector<Complex> v;
  Complex sigma;
  Complex delta;
  double step = 0.0;
};

ShootingResult shoot_delta(const Potential& q, const FrozenArguments& F,
                           Complex lambda, double step);

// Finite-difference discretization: Dirichlet Laplacian T on the interior
// grid plus the rank-one load q s^T, where s carries linear-interpolation
// weights at the frozen points.  det(A - lambda I) =
// det(T - lambda I) (1 + s^T (T - lambda I)^{-1} q)  (matrix determinant
// lemma), so one tridiagonal solve yields the secular value.
class SecularFunction {
 public:
  SecularFunction(const Potential& q, const FrozenArguments& F, double h);

  int grid_size() const { return k_; }          // number of intervals
  double step() const { return h_; }
  const std::vector<double>& load() const { return q_; }
  const std::vector<double>& sampling_row() const { return s_; }

  // 1 + s^T (T - lambda I)^{-1} q.  Throws PivotBreakdown near an
  // eigenvalue of T (caller perturbs lambda and retries).
  double value(double lambda) const;

  // number of eigenvalues of T strictly below lambda (Sturm count);
  // det(T - lambda I) has sign (-1)^count
  int eigenvalue_count_below(double lambda) const;

  // sign of det(A - lambda I): crossings locate discrete eigenvalues
  int crossing_sign(double lambda) const;

 private:
  int k_ = 0;       // intervals; interior nodes 1..k-1
  double h_ = 0.0;
  double diag_ = 0.0, off_ = 0.0;
  std::vector<double> q_;  // load column at interior nodes
  std::vector<double> s_;  // sampling row (<= 2n nonzeros)
};

// Real discrete eigenvalues over (0, (m_max+1/2)^2], Richardson
// extrapolated from runs at h and h/2.  Complex eigenvalues are invisible
// to this route by design; the count deficit against the winding totals
// is the detection signal.
Spectrum fd_spectrum(const Potential& q, const FrozenArguments& F, int m_max,
                     double h);

struct CrossValidationRow {
  int m = 0;
  Complex lambda;
  Complex rho;
  double closed_residual = 0.0;  // |Delta_closed(lambda)|
  double shoot_residual = 0.0;   // |Delta_shoot(lambda)|
  double fd_sqrt_diff = 0.0;     // |sqrt(lambda) - sqrt(lambda_fd)|, real modes
  bool fd_matched = false;
};

struct CrossValidationReport {
  std::vector<CrossValidationRow> rows;
  double max_shoot_residual = 0.0;
  double max_fd_sqrt_diff = 0.0;
  int fd_count_deficit = 0;  // winding total minus FD crossings found
};

CrossValidationReport cross_validate(const Potential& q,
                                     const FrozenArguments& F, int m_max);

}  // namespace frosl
