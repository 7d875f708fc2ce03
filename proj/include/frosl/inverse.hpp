#pragma once

#include <span>
#include <vector>

#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// G(m) = sum_i sin(m a_i) evaluated at m = 1..M; a mode with |G| at or
// below tau cannot be recovered stably.
struct UniquenessReport {
  struct Entry {
    int m;
    double G;
  };
  std::vector<Entry> values;
  double min_abs_G = 0.0;
  int worst_m = 0;
  double tau = 1e-3;
  bool pass = false;
};

UniquenessReport check_uniqueness(const FrozenArguments& F, int M,
                                  double tau = 1e-3);

// Analytic continuation of the truncated product:
// (sin(rho pi)/rho) / prod_{k=1}^{N} ((k^2-lambda)/k^2), evaluated through
// log magnitudes so N up to ~200 cannot overflow.  Throws PoleHit within
// 1e-8 of any k^2, k <= N.
Complex tail_factor(Complex lambda, int N);

// Exact lambda -> m^2 limit of tail_factor:
// pi (N!)^2 / ((N-m)! (N+m)!), via log-gamma.  Requires 1 <= m <= N.
double tail_at_integer(int m, int N);

// Delta rebuilt from a finite spectrum: finite product over slots with
// conjugate pairs multiplied as real quadratics, times the tail factor.
// Within 1e-8 of an integer squared the integer form is substituted
// (m <= N) or exact zero returned (m > N).
Complex delta_from_spectrum(const Spectrum& spec, Complex lambda);

struct ModeDiagnostics {
  int m = 0;
  double delta_at_m2 = 0.0;  // Re of the rebuilt Delta(m^2)
  double G = 0.0;
  double d = 0.0;
  bool ill_posed = false;
  bool conditioning_warning = false;  // imaginary residue above 1e-8 rel
};

// d_m = (2/pi) m^2 Re(Delta(m^2)) / G(m).  Throws IllPosedMode when
// |G(m)| <= tau.
double mode_coefficient(const Spectrum& spec, const FrozenArguments& F, int m,
                        double tau = 1e-3, ModeDiagnostics* diag = nullptr);

struct ReconstructionResult {
  SineCoefficients coefficients;
  Potential q_hat;                  // trig-form potential from the coefficients
  std::vector<double> q_hat_values; // pointwise synthesis on the caller grid
  std::vector<ModeDiagnostics> per_mode;
  int N_used = 0;
  int ill_posed_count = 0;
};

// Full reconstruction over m = 1..N on the given uniform grid.  Modes
// failing the uniqueness gate are skipped (zero coefficient, flagged);
// throws IllPosedMode only if every mode fails.
ReconstructionResult reconstruct(const Spectrum& spec,
                                 const FrozenArguments& F,
                                 std::span<const double> grid,
                                 double tau = 1e-3);

}  // namespace frosl
