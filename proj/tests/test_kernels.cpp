#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "frosl/kernels.hpp"

using frosl::kern::Backend;
using Complex = std::complex<double>;

namespace {

struct BackendGuard {
  explicit BackendGuard(Backend b) { frosl::kern::force_backend(b); }
  ~BackendGuard() { frosl::kern::reset_backend(); }
};

Complex run_osc_sum(Backend b, const std::vector<double>& c,
                    const std::vector<double>& dt, Complex rho) {
  BackendGuard guard(b);
  return frosl::kern::osc_sum(c.data(), dt.data(), c.size(), rho);
}

std::vector<double> run_sine_series(Backend b, const std::vector<double>& d,
                                    const std::vector<double>& t) {
  BackendGuard guard(b);
  std::vector<double> out(t.size());
  frosl::kern::sine_series(d.data(), d.size(), t.data(), out.data(), t.size());
  return out;
}

// magnitude scale of the sum, for a condition-aware tolerance
double abs_scale(const std::vector<double>& c, const std::vector<double>& dt,
                 Complex rho) {
  double s = 0.0;
  for (size_t i = 0; i < c.size(); ++i) {
    const Complex z = rho * dt[i];
    const Complex k = (std::abs(z) < 1e-4)
                          ? Complex(dt[i], 0.0)
                          : std::sin(z) / rho;
    s += std::abs(c[i] * k);
  }
  return s;
}

}  // namespace

TEST_CASE("avx2 backend is active on this host when supported") {
  if (frosl::kern::cpu_supports_avx2()) {
    frosl::kern::reset_backend();
    CHECK(frosl::kern::active_backend() == Backend::kAvx2);
  } else {
    CHECK(frosl::kern::active_backend() == Backend::kScalar);
  }
}

TEST_CASE("osc_sum backends agree across rho regimes") {
  if (!frosl::kern::cpu_supports_avx2()) return;
  std::mt19937 gen(20240811);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  const std::vector<Complex> rhos = {
      {0.0, 0.0},      {1e-6, 0.0},     {0.0, 1e-6},    {1e-5, 1e-5},
      {1.0, 0.0},      {2.5, 0.0},      {10.0, 0.0},    {25.5, 0.0},
      {0.0, 1.0},      {0.0, 2.0},      {0.0, -3.0},    {2.0, 0.5},
      {1.99593, 0.4925}, {10.0, 2.0},   {21.5, -2.0},   {0.7, -1.3},
      {-3.0, 0.7},     {34.0, 1.9}};
  const std::vector<size_t> sizes = {1, 2, 3, 4, 5, 7, 64, 257, 1001, 4098};

  for (size_t n : sizes) {
    std::vector<double> c(n), dt(n);
    for (size_t i = 0; i < n; ++i) {
      c[i] = coeff(gen);
      dt[i] = M_PI * double(n - 1 - i) / std::max<size_t>(n - 1, 1);
    }
    for (const Complex& rho : rhos) {
      const Complex a = run_osc_sum(Backend::kScalar, c, dt, rho);
      const Complex b = run_osc_sum(Backend::kAvx2, c, dt, rho);
      const double tol = 1e-13 * (1.0 + abs_scale(c, dt, rho));
      CAPTURE(n);
      CAPTURE(rho.real());
      CAPTURE(rho.imag());
      CHECK(std::abs(a - b) <= tol);
    }
  }
}

TEST_CASE("osc_sum series/direct switchover stays continuous") {
  // nodes straddling |rho*dt| = 1e-4 on both backends
  std::vector<double> c(32, 1.0), dt(32);
  for (size_t i = 0; i < dt.size(); ++i)
    dt[i] = (0.5 + double(i)) * (1e-4 / 16.0);
  for (Backend b : {Backend::kScalar, Backend::kAvx2}) {
    if (b == Backend::kAvx2 && !frosl::kern::cpu_supports_avx2()) continue;
    const Complex lo = run_osc_sum(b, c, dt, Complex(1.0 - 1e-9, 0.0));
    const Complex hi = run_osc_sum(b, c, dt, Complex(1.0 + 1e-9, 0.0));
    CHECK(std::abs(lo - hi) < 1e-10);
  }
}

TEST_CASE("sine_series backends agree") {
  if (!frosl::kern::cpu_supports_avx2()) return;
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int modes : {1, 2, 5, 21, 64}) {
    std::vector<double> d(size_t(modes));
    for (auto& v : d) v = coeff(gen);
    double sum_abs = 0.0;
    for (double v : d) sum_abs += std::abs(v);
    for (size_t n : {1ul, 3ul, 4ul, 33ul, 513ul}) {
      std::vector<double> t(n);
      for (size_t i = 0; i < n; ++i)
        t[i] = M_PI * double(i) / std::max<size_t>(n - 1, 1);
      const auto a = run_sine_series(Backend::kScalar, d, t);
      const auto b = run_sine_series(Backend::kAvx2, d, t);
      for (size_t i = 0; i < n; ++i)
        CHECK(std::abs(a[i] - b[i]) <= 1e-12 * (1.0 + sum_abs));
    }
  }
}

TEST_CASE("avx2 trig/exp match libm on adversarial arguments") {
  if (!frosl::kern::cpu_supports_avx2()) return;
  // osc_sum with a single unit coefficient isolates sin(rho*dt)/rho
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> arg(0.0, M_PI);
  std::uniform_real_distribution<double> rmag(0.1, 300.0);

  for (int trial = 0; trial < 2000; ++trial) {
    const double x = arg(gen);
    const double r = rmag(gen);
    const std::vector<double> c = {1.0};
    const std::vector<double> dt = {x};
    const Complex a = run_osc_sum(Backend::kScalar, c, dt, Complex(r, 0.0));
    const Complex b = run_osc_sum(Backend::kAvx2, c, dt, Complex(r, 0.0));
    CHECK(std::abs(a - b) <= 5e-15 * (1.0 + 1.0 / r));
  }
  // near multiples of pi/2 where the reduction is most delicate
  for (int k = 1; k < 400; ++k) {
    const double theta = k * M_PI / 2.0 + 3e-16 * k;
    const std::vector<double> c = {1.0};
    const std::vector<double> dt = {1.0};
    const Complex a = run_osc_sum(Backend::kScalar, c, dt, Complex(theta, 0.0));
    const Complex b = run_osc_sum(Backend::kAvx2, c, dt, Complex(theta, 0.0));
    CHECK(std::abs(a - b) <= 5e-15);
  }
  // hyperbolic branch through complex rho
  for (int trial = 0; trial < 500; ++trial) {
    const double b_im = std::uniform_real_distribution<double>(-8.0, 8.0)(gen);
    const std::vector<double> c = {1.0};
    const std::vector<double> dt = {arg(gen)};
    const Complex rho(rmag(gen) * 0.05, b_im);
    const Complex va = run_osc_sum(Backend::kScalar, c, dt, rho);
    const Complex vb = run_osc_sum(Backend::kAvx2, c, dt, rho);
    CHECK(std::abs(va - vb) <= 1e-13 * (1.0 + std::abs(va)));
  }
}

TEST_CASE("force_backend rejects unsupported targets gracefully") {
  if (frosl::kern::cpu_supports_avx2()) {
    frosl::kern::force_backend(Backend::kAvx2);
    CHECK(frosl::kern::active_backend() == Backend::kAvx2);
    frosl::kern::reset_backend();
  }
  frosl::kern::force_backend(Backend::kScalar);
  CHECK(frosl::kern::active_backend() == Backend::kScalar);
  frosl::kern::reset_backend();
}
