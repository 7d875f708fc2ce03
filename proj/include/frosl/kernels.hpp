#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Data-parallel inner loops behind the quadrature and synthesis layers.
// Every kernel has a scalar reference implementation and an AVX2 variant;
// the backend is resolved once at first use (CPU detection, overridable
// via FROZEN_SPECTRAL_SIMD=scalar|avx2) and the two are equivalence-tested
// against each other.

namespace frosl::kern {

enum class Backend { kScalar, kAvx2 };

// Backend currently in effect.
Backend active_backend();
const char* backend_name(Backend b);

// Test hook: force a specific backend.  Throws std::runtime_error if the
// host CPU cannot run it.
void force_backend(Backend b);
void reset_backend();  // back to auto-detection

bool cpu_supports_avx2();

// sum_i c[i] * sin(rho*dt[i])/rho with the series form
// dt - rho^2 dt^3/6 + rho^4 dt^5/120 below the |rho*dt| < 1e-4 cutoff.
// dt values must be finite; typical use has dt in [0, pi].
std::complex<double> osc_sum(const double* c, const double* dt, std::size_t n,
                             std::complex<double> rho);

// out[j] = sum_{m=1}^{M} d[m-1] * sin(m*(pi - t[j]))
void sine_series(const double* d, std::size_t modes, const double* t,
                 double* out, std::size_t n);

namespace detail {

struct Ops {
  std::complex<double> (*osc_sum)(const double*, const double*, std::size_t,
                                  std::complex<double>);
  void (*sine_series)(const double*, std::size_t, const double*, double*,
                      std::size_t);
};

const Ops& scalar_ops();
const Ops& avx2_ops();  // null members when built without x86 support

}  // namespace detail

}  // namespace frosl::kern
