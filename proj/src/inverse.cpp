#include "frosl/inverse.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "frosl/errors.hpp"
#include "frosl/fourier.hpp"

namespace frosl {

namespace {

constexpr double kIntegerSnap = 1e-8;

// log(sin(rho pi)/rho), stable for large |Im rho|.
Complex log_sinc_pi(Complex rho) {
  const Complex z = rho * M_PI;
  const double v = z.imag();
  if (std::abs(v) <= 20.0) {
    if (std::abs(z) < kSincSeriesCutoff) return std::log(sinc_kernel(rho, M_PI));
    return std::log(std::sin(z)) - std::log(rho);
  }
  // sin z = -e^{-iz}(1 - e^{2iz})/(2i) for Im z >> 0, mirrored below
  const Complex i(0.0, 1.0);
  Complex logsin;
  if (v > 0.0)
    logsin = -i * z + i * (M_PI / 2.0) - std::log(2.0) +
             std::log(1.0 - std::exp(2.0 * i * z));
  else
    logsin = i * z - i * (M_PI / 2.0) - std::log(2.0) +
             std::log(1.0 - std::exp(-2.0 * i * z));
  return logsin - std::log(rho);
}

// nearest integer m >= 1 with |lambda - m^2| < snap, or 0
int near_integer_sq(Complex lambda) {
  if (lambda.real() < 0.25) return 0;
  const long m = std::lround(std::sqrt(lambda.real()));
  if (m < 1) return 0;
  if (std::abs(lambda - Complex(double(m * m), 0.0)) < kIntegerSnap)
    return static_cast<int>(m);
  return 0;
}

// finite product over slots 1..N: real eigenvalue k contributes
// (lambda_k - lambda)/k^2, a conjugate pair in slots k, k+1 contributes
// the real quadratic (lambda^2 - 2 Re(lambda_k) lambda + |lambda_k|^2)
// over (k(k+1))^2
Complex finite_product(const Spectrum& spec, Complex lambda) {
  const int N = spec.size();
  Complex prod(1.0, 0.0);
  int k = 1;
  while (k <= N) {
    const SpectralPoint& p = spec.at(k);
    if (!p.is_real()) {
      if (k + 1 > N)
        throw std::invalid_argument(
            "spectrum not conjugate-closed: unmatched complex eigenvalue");
      const SpectralPoint& q = spec.at(k + 1);
      if (std::abs(q.lambda - std::conj(p.lambda)) >
          1e-9 * (1.0 + std::abs(p.lambda)))
        throw std::invalid_argument(
            "spectrum not conjugate-closed: conjugate partner missing");
      const double re = p.lambda.real();
      const double abs2 = std::norm(p.lambda);
      const Complex quad = lambda * lambda - 2.0 * re * lambda + abs2;
      const double den = double(k) * double(k + 1);
      prod *= quad / (den * den);
      k += 2;
    } else {
      prod *= (p.lambda.real() - lambda) / (double(k) * double(k));
      k += 1;
    }
  }
  return prod;
}

}  // namespace

UniquenessReport check_uniqueness(const FrozenArguments& F, int M,
                                  double tau) {
  if (M < 1) throw std::invalid_argument("check_uniqueness: M >= 1 required");
  UniquenessReport rep;
  rep.tau = tau;
  rep.values.reserve(static_cast<size_t>(M));
  rep.min_abs_G = 1e300;
  for (int m = 1; m <= M; ++m) {
    const double g = F.G(double(m));
    rep.values.push_back({m, g});
    if (std::abs(g) < rep.min_abs_G) {
      rep.min_abs_G = std::abs(g);
      rep.worst_m = m;
    }
  }
  rep.pass = rep.min_abs_G > tau;
  return rep;
}

Complex tail_factor(Complex lambda, int N) {
  if (N < 0) throw std::invalid_argument("tail_factor: N >= 0 required");
  for (int k = 1; k <= N; ++k)
    if (std::abs(lambda - Complex(double(k) * double(k), 0.0)) < kIntegerSnap) {
      std::ostringstream os;
      os << "tail_factor: lambda within 1e-8 of " << k << "^2";
      throw PoleHit(os.str());
    }
  const Complex rho = principal_rho(lambda);
  Complex log_acc = log_sinc_pi(rho);
  for (int k = 1; k <= N; ++k) {
    const double k2 = double(k) * double(k);
    log_acc -= std::log((k2 - lambda) / k2);
  }
  return std::exp(log_acc);
}

double tail_at_integer(int m, int N) {
  if (m < 1 || m > N)
    throw std::invalid_argument("tail_at_integer: need 1 <= m <= N");
  // pi (N!)^2 / ((N-m)! (N+m)!)
  const double lg = 2.0 * std::lgamma(double(N) + 1.0) -
                    std::lgamma(double(N - m) + 1.0) -
                    std::lgamma(double(N + m) + 1.0);
  return M_PI * std::exp(lg);
}

Complex delta_from_spectrum(const Spectrum& spec, Complex lambda) {
  const int N = spec.size();
  if (N < 1)
    throw std::invalid_argument("delta_from_spectrum: empty spectrum");
  const int m = near_integer_sq(lambda);
  if (m > 0) {
    if (m > N) return Complex(0.0, 0.0);  // sin(m pi) zero, no pole to cancel
    const Complex lam_int(double(m) * double(m), 0.0);
    return finite_product(spec, lam_int) * tail_at_integer(m, N);
  }
  return finite_product(spec, lambda) * tail_factor(lambda, N);
}

double mode_coefficient(const Spectrum& spec, const FrozenArguments& F, int m,
                        double tau, ModeDiagnostics* diag) {
  const int N = spec.size();
  if (m < 1 || m > N)
    throw std::invalid_argument(
        "mode_coefficient: mode index beyond known spectrum");
  const double G = F.G(double(m));
  ModeDiagnostics local;
  local.m = m;
  local.G = G;
  if (std::abs(G) <= tau) {
    local.ill_posed = true;
    if (diag) *diag = local;
    std::ostringstream os;
    os << "mode " << m << " unrecoverable: |G(" << m << ")| = " << std::abs(G)
       << " <= tau = " << tau;
    throw IllPosedMode(os.str(), m);
  }
  const Complex dm2 = delta_from_spectrum(spec, Complex(double(m) * double(m), 0.0));
  local.delta_at_m2 = dm2.real();
  local.conditioning_warning =
      std::abs(dm2.imag()) > 1e-8 * std::abs(dm2.real());
  const double d =
      (2.0 / M_PI) * double(m) * double(m) * dm2.real() / G;
  local.d = d;
  if (diag) *diag = local;
  return d;
}

ReconstructionResult reconstruct(const Spectrum& spec,
                                 const FrozenArguments& F,
                                 std::span<const double> grid, double tau) {
  const int N = spec.size();
  if (N < 1) throw std::invalid_argument("reconstruct: empty spectrum");

  SineCoefficients coeff;
  coeff.d.assign(static_cast<size_t>(N), 0.0);
  std::vector<ModeDiagnostics> per_mode(static_cast<size_t>(N));
  int ill = 0;
  for (int m = 1; m <= N; ++m) {
    ModeDiagnostics diag;
    try {
      coeff.d[size_t(m - 1)] = mode_coefficient(spec, F, m, tau, &diag);
    } catch (const IllPosedMode&) {
      ++ill;
    }
    per_mode[size_t(m - 1)] = diag;
  }
  if (ill == N)
    throw IllPosedMode("all modes ill-posed: every |G(m)| <= tau", 0);

  std::vector<double> qh = synthesize(coeff, grid);
  const int pts = std::max<int>(33, static_cast<int>(grid.size()));
  Potential q_hat = synthesize_potential(coeff, pts);
  ReconstructionResult out{std::move(coeff), std::move(q_hat), std::move(qh),
                           std::move(per_mode), N, ill};
  return out;
}

}  // namespace frosl
