#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

#include "frosl/kernels.hpp"

namespace frosl::kern {
namespace {

std::mutex g_mutex;
std::atomic<const detail::Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::kScalar};

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return detail::avx2_ops().osc_sum != nullptr &&
         __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::Ops* resolve() {
  const detail::Ops* ops = g_ops.load(std::memory_order_acquire);
  if (ops) return ops;
  std::lock_guard<std::mutex> lock(g_mutex);
  ops = g_ops.load(std::memory_order_relaxed);
  if (ops) return ops;
  Backend b = avx2_available() ? Backend::kAvx2 : Backend::kScalar;
  if (const char* env = std::getenv("FROZEN_SPECTRAL_SIMD")) {
    const std::string want(env);
    if (want == "scalar") {
      b = Backend::kScalar;
    } else if (want == "avx2") {
      if (!avx2_available())
        throw std::runtime_error("FROZEN_SPECTRAL_SIMD=avx2: not supported");
      b = Backend::kAvx2;
    } else if (!want.empty()) {
      throw std::runtime_error("FROZEN_SPECTRAL_SIMD: unknown backend '" +
                               want + "'");
    }
  }
  ops = (b == Backend::kAvx2) ? &detail::avx2_ops() : &detail::scalar_ops();
  g_backend.store(b, std::memory_order_relaxed);
  g_ops.store(ops, std::memory_order_release);
  return ops;
}

}  // namespace

Backend active_backend() {
  resolve();
  return g_backend.load(std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (b == Backend::kAvx2 && !avx2_available())
    throw std::runtime_error("force_backend: avx2 not supported on this host");
  g_backend.store(b, std::memory_order_relaxed);
  g_ops.store(b == Backend::kAvx2 ? &detail::avx2_ops() : &detail::scalar_ops(),
              std::memory_order_release);
}

void reset_backend() {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_ops.store(nullptr, std::memory_order_release);
}

bool cpu_supports_avx2() { return avx2_available(); }

std::complex<double> osc_sum(const double* c, const double* dt, std::size_t n,
                             std::complex<double> rho) {
  return resolve()->osc_sum(c, dt, n, rho);
}

void sine_series(const double* d, std::size_t modes, const double* t,
                 double* out, std::size_t n) {
  resolve()->sine_series(d, modes, t, out, n);
}

}  // namespace frosl::kern
