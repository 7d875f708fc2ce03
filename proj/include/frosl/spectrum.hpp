#pragma once

#include <functional>
#include <vector>

#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// Evaluator of Delta(lambda); must be pure (callable concurrently).
using DeltaFn = std::function<Complex(Complex)>;

struct RootSearchConfig {
  int m_max = 20;            // search covers Re rho in [0, m_max + 1/2]
  double im_height = 2.0;    // |Im rho| ceiling for complex roots
  double newton_tol = 1e-11; // on |Delta| at rho scale
  int max_iter = 60;
  int scan_points_per_unit = 40;
  int winding_samples_per_side = 32;
};

struct RealRoot {
  double rho;
  bool low_precision = false;  // Newton/bisection budget exhausted
};

// Axis-aligned box in the rho plane.
struct RhoBox {
  double re_lo, re_hi, im_lo, im_hi;
};

// Real zeros of rho * Delta(rho^2) in [lo, hi]: sign-change scan at the
// configured density, bisection + safeguarded Newton refinement.
std::vector<RealRoot> real_root_scan(const DeltaFn& delta, double lo,
                                     double hi,
                                     const RootSearchConfig& config);

// Winding number of Delta(rho^2) around 0 along the box boundary
// (counterclockwise).  Phase increments above pi/2 trigger adaptive
// bisection of the offending segment.  Throws ZeroOnContour /
// PhaseJumpUnresolved.
int winding_count(const DeltaFn& delta, const RhoBox& box,
                  int samples_per_side);

// Complex Newton on Delta(rho^2) from the given seed.  Throws
// NoConvergence / EscapedRegion (iterate left the doubled search box).
Complex refine_complex_root(const DeltaFn& delta, Complex seed,
                            const RhoBox& search_box,
                            const RootSearchConfig& config);

// Full search: per-box winding counts + real scan + complex Newton for
// deficits, assembled into a sorted conjugate-closed Spectrum of
// lambda = rho^2.  Throws CountMismatch when roots found != winding total.
Spectrum compute_spectrum(const Potential& q, const FrozenArguments& F,
                          const RootSearchConfig& config);

// Same search against an arbitrary evaluator (oracles, cached functions).
Spectrum compute_spectrum_fn(const DeltaFn& delta,
                             const RootSearchConfig& config);

}  // namespace frosl
