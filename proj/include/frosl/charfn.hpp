#pragma once

#include <optional>
#include <vector>

#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// One evaluation of the characteristic function Delta_n(lambda) together
// with the integrals it was assembled from.
struct CharFnEvaluation {
  Complex lambda;
  Complex rho;
  std::vector<Complex> V;  // V_j = integral_0^{a_j} q(t) sin rho(a_j-t)/rho dt
  Complex I_pi;            // integral_0^pi q(t) sin rho(pi-t)/rho dt
  Complex G_over_rho;      // sum_j sin(rho a_j)/rho
  Complex sin_pi_over_rho; // sin(rho pi)/rho
  std::optional<Complex> delta;

  Complex sum_V() const {
    Complex s(0.0, 0.0);
    for (const Complex& v : V) s += v;
    return s;
  }
};

// The integrals only; delta left unset.
CharFnEvaluation boundary_integrals(const Potential& q,
                                    const FrozenArguments& F, Complex lambda);

// Closed form: sin(rho pi)/rho (1 - sum V_j) + (sum_j sin(rho a_j)/rho) I_pi.
// This is the fast path.
Complex delta_closed(const Potential& q, const FrozenArguments& F,
                     Complex lambda);
CharFnEvaluation delta_closed_eval(const Potential& q,
                                   const FrozenArguments& F, Complex lambda);

// Same closed form but at an explicit rho (evenness checks: Delta depends
// on lambda = rho^2 only).
Complex delta_closed_at_rho(const Potential& q, const FrozenArguments& F,
                            Complex rho);

// Fidelity path: determinant of the reduced (n+1)x(n+1) matrix by LU with
// partial pivoting.
Complex delta_det(const Potential& q, const FrozenArguments& F,
                  Complex lambda);

struct SValues {
  std::vector<Complex> S_at_a;
  Complex S_at_pi;
  Complex sigma;  // sum_i S(a_i, lambda)
};

// Solution values via the sigma reduction.  Throws
// SingularAuxiliarySystem when |1 - sum V_j| <= 1e-12.
SValues s_values(const Potential& q, const FrozenArguments& F, Complex lambda);

// det of a small complex matrix, LU with partial pivoting (row-major).
Complex lu_determinant(std::vector<Complex> a, int n);

}  // namespace frosl
