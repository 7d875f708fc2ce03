#include "frosl/charfn.hpp"

#include <cmath>
#include <utility>

#include "frosl/errors.hpp"
#include "frosl/quadrature.hpp"

namespace frosl {

namespace {

CharFnEvaluation integrals_at_rho(const Potential& q, const FrozenArguments& F,
                                  Complex lambda, Complex rho) {
  CharFnEvaluation ev;
  ev.lambda = lambda;
  ev.rho = rho;
  ev.V.reserve(static_cast<size_t>(F.n()));
  Complex g(0.0, 0.0);
  for (double a : F.points()) {
    ev.V.push_back(integrate_q_osc(q, a, rho));
    g += sinc_kernel(rho, a);
  }
  ev.I_pi = integrate_q_osc(q, M_PI, rho);
  ev.G_over_rho = g;
  ev.sin_pi_over_rho = sinc_kernel(rho, M_PI);
  return ev;
}

Complex closed_combo(const CharFnEvaluation& ev) {
  return ev.sin_pi_over_rho * (1.0 - ev.sum_V()) + ev.G_over_rho * ev.I_pi;
}

}  // namespace

CharFnEvaluation boundary_integrals(const Potential& q,
                                    const FrozenArguments& F, Complex lambda) {
  return integrals_at_rho(q, F, lambda, principal_rho(lambda));
}

CharFnEvaluation delta_closed_eval(const Potential& q,
                                   const FrozenArguments& F, Complex lambda) {
  CharFnEvaluation ev = boundary_integrals(q, F, lambda);
  ev.delta = closed_combo(ev);
  return ev;
}

Complex delta_closed(const Potential& q, const FrozenArguments& F,
                     Complex lambda) {
  return closed_combo(boundary_integrals(q, F, lambda));
}

Complex delta_closed_at_rho(const Potential& q, const FrozenArguments& F,
                            Complex rho) {
  return closed_combo(integrals_at_rho(q, F, rho * rho, rho));
}

Complex lu_determinant(std::vector<Complex> a, int n) {
  // row-major n x n, destroyed in place
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a[size_t(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double m = std::abs(a[size_t(i) * n + k]);
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(a[size_t(piv) * n + j], a[size_t(k) * n + j]);
      sign = -sign;
    }
    const Complex inv = 1.0 / a[size_t(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      const Complex f = a[size_t(i) * n + k] * inv;
      if (f == Complex(0.0, 0.0)) continue;
      for (int j = k + 1; j < n; ++j)
        a[size_t(i) * n + j] -= f * a[size_t(k) * n + j];
    }
  }
  Complex det(sign, 0.0);
  for (int k = 0; k < n; ++k) det *= a[size_t(k) * n + k];
  return det;
}

Complex delta_det(const Potential& q, const FrozenArguments& F,
                  Complex lambda) {
  const CharFnEvaluation ev = boundary_integrals(q, F, lambda);
  const int n = F.n();
  const int dim = n + 1;
  // Reduced matrix: column 0 the sines, column 1 the integrals with -1
  // folded into row 0, columns 2.. the sparse {1,-1,0} elimination
  // pattern (row 0 all ones, row j a single -1 at column j+1).
  std::vector<Complex> m(size_t(dim) * dim, Complex(0.0, 0.0));
  for (int j = 0; j < n; ++j) {
    m[size_t(j) * dim + 0] = sinc_kernel(ev.rho, F[j]);
    m[size_t(j) * dim + 1] = ev.V[size_t(j)];
  }
  m[0 * dim + 1] -= 1.0;
  m[size_t(n) * dim + 0] = ev.sin_pi_over_rho;
  m[size_t(n) * dim + 1] = ev.I_pi;
  for (int col = 2; col < dim; ++col) {
    m[0 * dim + col] = Complex(1.0, 0.0);
    m[size_t(col - 1) * dim + col] = Complex(-1.0, 0.0);
  }
  return lu_determinant(std::move(m), dim);
}

SValues s_values(const Potential& q, const FrozenArguments& F,
                 Complex lambda) {
  const CharFnEvaluation ev = boundary_integrals(q, F, lambda);
  const Complex denom = 1.0 - ev.sum_V();
  if (std::abs(denom) <= 1e-12)
    throw SingularAuxiliarySystem(
        "frozen-value system degenerates: |1 - sum V_j| <= 1e-12");
  SValues out;
  out.sigma = ev.G_over_rho / denom;
  out.S_at_a.reserve(ev.V.size());
  for (size_t j = 0; j < ev.V.size(); ++j)
    out.S_at_a.push_back(sinc_kernel(ev.rho, F[int(j)]) +
                         out.sigma * ev.V[j]);
  out.S_at_pi = ev.sin_pi_over_rho + out.sigma * ev.I_pi;
  return out;
}

}  // namespace frosl
