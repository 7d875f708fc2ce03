#include "frosl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frosl/charfn.hpp"
#include "frosl/errors.hpp"

namespace frosl {

namespace {

// cubic (4-point Lagrange) read of a node array at x = t/h
Complex cubic_at(const std::vector<Complex>& y, double h, double t) {
  const int n = static_cast<int>(y.size());
  const double u = t / h;
  int i0 = static_cast<int>(std::floor(u)) - 1;
  i0 = std::max(0, std::min(i0, n - 4));
  const double x = u - i0;
  // Lagrange weights for nodes 0,1,2,3 at position x
  const double w0 = -(x - 1) * (x - 2) * (x - 3) / 6.0;
  const double w1 = x * (x - 2) * (x - 3) / 2.0;
  const double w2 = -x * (x - 1) * (x - 3) / 2.0;
  const double w3 = x * (x - 1) * (x - 2) / 6.0;
  return w0 * y[size_t(i0)] + w1 * y[size_t(i0) + 1] + w2 * y[size_t(i0) + 2] +
         w3 * y[size_t(i0) + 3];
}

}  // namespace

ShootingResult shoot_delta(const Potential& q, const FrozenArguments& F,
                           Complex lambda, double step) {
  if (!(step <= M_PI / 256.0))
    throw std::invalid_argument("shoot_delta: step <= pi/256 required");
  const int n = static_cast<int>(std::ceil(M_PI / step));
  const double h = M_PI / n;
  // q on the half-step grid so all RK4 stage reads hit nodes exactly
  const Potential qfine = q.resampled(2 * n + 1);
  const std::vector<double>& qs = qfine.samples();

  ShootingResult res;
  res.step = h;
  res.u.resize(size_t(n) + 1);
  res.v.resize(size_t(n) + 1);
  Complex u(0.0, 0.0), up(1.0, 0.0);
  Complex v(0.0, 0.0), vp(0.0, 0.0);
  res.u[0] = u;
  res.v[0] = v;
  for (int i = 0; i < n; ++i) {
    const double q0 = qs[size_t(2 * i)];
    const double qm = qs[size_t(2 * i) + 1];
    const double q1 = qs[size_t(2 * i) + 2];
    // u' = p, p' = -lambda u;  v' = w, w' = -lambda v + q
    const Complex k1u = up, k1p = -lambda * u;
    const Complex k1v = vp, k1w = -lambda * v + q0;
    const Complex k2u = up + 0.5 * h * k1p, k2p = -lambda * (u + 0.5 * h * k1u);
    const Complex k2v = vp + 0.5 * h * k1w,
                  k2w = -lambda * (v + 0.5 * h * k1v) + qm;
    const Complex k3u = up + 0.5 * h * k2p, k3p = -lambda * (u + 0.5 * h * k2u);
    const Complex k3v = vp + 0.5 * h * k2w,
                  k3w = -lambda * (v + 0.5 * h * k2v) + qm;
    const Complex k4u = up + h * k3p, k4p = -lambda * (u + h * k3u);
    const Complex k4v = vp + h * k3w, k4w = -lambda * (v + h * k3v) + q1;
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    up += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    vp += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    res.u[size_t(i) + 1] = u;
    res.v[size_t(i) + 1] = v;
  }

  Complex sum_u(0.0, 0.0), sum_v(0.0, 0.0);
  for (double a : F.points()) {
    sum_u += cubic_at(res.u, h, a);
    sum_v += cubic_at(res.v, h, a);
  }
  const Complex denom = 1.0 - sum_v;
  if (std::abs(denom) <= 1e-12)
    throw SingularAuxiliarySystem(
        "shooting: frozen-value system degenerates, |1 - sum v(a_i)| <= 1e-12");
  res.sigma = sum_u / denom;
  res.delta = (res.u.back() + res.sigma * res.v.back()) * denom;
  return res;
}

SecularFunction::SecularFunction(const Potential& q, const FrozenArguments& F,
                                 double h) {
  if (!(h <= M_PI / 512.0))
    throw std::invalid_argument("SecularFunction: h <= pi/512 required");
  k_ = static_cast<int>(std::lround(M_PI / h));
  h_ = M_PI / k_;
  diag_ = 2.0 / (h_ * h_);
  off_ = -1.0 / (h_ * h_);
  const int interior = k_ - 1;
  q_.resize(size_t(interior));
  for (int i = 1; i < k_; ++i) q_[size_t(i - 1)] = q.value_at(i * h_);
  s_.assign(size_t(interior), 0.0);
  for (double a : F.points()) {
    const double u = a / h_;
    const int p = static_cast<int>(std::floor(u));
    const double w = u - p;
    if (p >= 1 && p <= interior) s_[size_t(p - 1)] += 1.0 - w;
    if (p + 1 >= 1 && p + 1 <= interior) s_[size_t(p)] += w;
  }
}

double SecularFunction::value(double lambda) const {
  const int n = static_cast<int>(q_.size());
  // LDL^T pass on T - lambda I with the solve fused in
  std::vector<double> w(q_.begin(), q_.end());
  std::vector<double> d(static_cast<size_t>(n));
  const double pivot_floor = 1e-12 * diag_;
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    double di = diag_ - lambda;
    if (i > 0) di -= off_ * off_ / prev;
    if (std::abs(di) < pivot_floor)
      throw PivotBreakdown("secular solve: pivot below threshold");
    if (i > 0) w[size_t(i)] -= off_ / prev * w[size_t(i) - 1];
    d[size_t(i)] = di;
    prev = di;
  }
  double acc = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    double x = w[size_t(i)] / d[size_t(i)];
    if (i < n - 1) x -= off_ / d[size_t(i)] * w[size_t(i) + 1];
    w[size_t(i)] = x;
    acc += s_[size_t(i)] * x;
  }
  return 1.0 + acc;
}

int SecularFunction::eigenvalue_count_below(double lambda) const {
  const int n = static_cast<int>(q_.size());
  int count = 0;
  double prev = 0.0;
  const double tiny = 1e-300;
  for (int i = 0; i < n; ++i) {
    double di = diag_ - lambda;
    if (i > 0) di -= off_ * off_ / prev;
    if (di == 0.0) di = tiny;
    if (di < 0.0) ++count;
    prev = di;
  }
  return count;
}

int SecularFunction::crossing_sign(double lambda) const {
  const int det_sign = (eigenvalue_count_below(lambda) % 2 == 0) ? 1 : -1;
  double sec;
  try {
    sec = value(lambda);
  } catch (const PivotBreakdown&) {
    sec = value(lambda + 1e-9);
  }
  if (sec == 0.0) return 0;
  return det_sign * (sec > 0.0 ? 1 : -1);
}

namespace {

std::vector<double> fd_crossings(const SecularFunction& sec, double r_max,
                                 int per_unit) {
  // scan in r = sqrt(lambda): crossings are near-uniform there
  std::vector<double> roots;
  const double r_lo = 0.05;
  const int npts = std::max(2, int(std::ceil((r_max - r_lo) * per_unit)) + 1);
  const double hr = (r_max - r_lo) / (npts - 1);
  int s_prev = sec.crossing_sign(r_lo * r_lo);
  double r_prev = r_lo;
  for (int i = 1; i < npts; ++i) {
    const double r = r_lo + i * hr;
    const int s = sec.crossing_sign(r * r);
    if (s != s_prev && s_prev != 0) {
      double a = r_prev, b = r;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        const int sm = sec.crossing_sign(mid * mid);
        if (sm == s_prev)
          a = mid;
        else
          b = mid;
        if (b - a < 1e-12 * (1.0 + b)) break;
      }
      roots.push_back(0.5 * (a + b));
    }
    s_prev = s;
    r_prev = r;
  }
  return roots;
}

}  // namespace

Spectrum fd_spectrum(const Potential& q, const FrozenArguments& F, int m_max,
                     double h) {
  const double r_max = double(m_max) + 0.5;
  const SecularFunction coarse(q, F, h);
  const SecularFunction fine(q, F, h / 2.0);
  const std::vector<double> rc = fd_crossings(coarse, r_max, 40);
  const std::vector<double> rf = fd_crossings(fine, r_max, 40);

  // pair coarse roots to the nearest fine root, then eliminate the O(h^2)
  // term: lambda = (4 lambda_{h/2} - lambda_h) / 3
  Spectrum spec;
  spec.m_max = m_max;
  std::vector<bool> used(rc.size(), false);
  for (double r_f : rf) {
    double best = 1e300;
    int bi = -1;
    for (size_t i = 0; i < rc.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(rc[i] - r_f);
      if (d < best) {
        best = d;
        bi = int(i);
      }
    }
    double lam;
    if (bi >= 0 && best < 0.2) {
      used[size_t(bi)] = true;
      lam = (4.0 * r_f * r_f - rc[size_t(bi)] * rc[size_t(bi)]) / 3.0;
    } else {
      lam = r_f * r_f;  // unmatched: keep the fine-grid value
    }
    if (lam > 0.0 && std::sqrt(lam) <= r_max)
      spec.eigenvalues.push_back(
          SpectralPoint::from_lambda(Complex(lam, 0.0)));
  }
  spec.sort_and_index();
  return spec;
}

CrossValidationReport cross_validate(const Potential& q,
                                     const FrozenArguments& F, int m_max) {
  RootSearchConfig config;
  config.m_max = m_max;
  const Spectrum main = compute_spectrum(q, F, config);
  const Spectrum fd = fd_spectrum(q, F, m_max, M_PI / 2048.0);

  CrossValidationReport rep;
  rep.fd_count_deficit = main.size() - fd.size();
  std::vector<bool> used(size_t(fd.size()), false);
  const double step = M_PI / 2048.0;
  for (int m = 1; m <= main.size(); ++m) {
    const SpectralPoint& p = main.at(m);
    CrossValidationRow row;
    row.m = m;
    row.lambda = p.lambda;
    row.rho = p.rho;
    row.closed_residual = std::abs(delta_closed(q, F, p.lambda));
    row.shoot_residual = std::abs(shoot_delta(q, F, p.lambda, step).delta);
    if (p.is_real()) {
      double best = 1e300;
      int bi = -1;
      for (int i = 0; i < fd.size(); ++i) {
        if (used[size_t(i)]) continue;
        const double d =
            std::abs(fd.at(i + 1).rho.real() - p.rho.real());
        if (d < best) {
          best = d;
          bi = i;
        }
      }
      if (bi >= 0 && best < 0.2) {
        used[size_t(bi)] = true;
        row.fd_matched = true;
        row.fd_sqrt_diff = best;
        rep.max_fd_sqrt_diff = std::max(rep.max_fd_sqrt_diff, best);
      }
    }
    rep.max_shoot_residual =
        std::max(rep.max_shoot_residual, row.shoot_residual);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace frosl
