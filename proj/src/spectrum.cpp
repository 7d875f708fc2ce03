#include "frosl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frosl/charfn.hpp"
#include "frosl/errors.hpp"
#include "frosl/parallel.hpp"

namespace frosl {

namespace {

double g_scan(const DeltaFn& delta, double rho) {
  return rho * delta(Complex(rho * rho, 0.0)).real();
}

// Safeguarded Newton on g(rho) = rho*Delta(rho^2) inside a sign-change
// bracket.  Numeric central-difference derivative.
RealRoot refine_real(const DeltaFn& delta, double a, double b, double ga,
                     const RootSearchConfig& config) {
  double x = 0.5 * (a + b);
  for (int it = 0; it < config.max_iter; ++it) {
    const double gx = g_scan(delta, x);
    if (std::abs(gx) <= config.newton_tol * (1.0 + std::abs(x)) ||
        (b - a) <= 1e-13 * (1.0 + std::abs(x)))
      return {x, false};
    // keep the bracket
    if ((gx < 0.0) == (ga < 0.0)) {
      a = x;
      ga = gx;
    } else {
      b = x;
    }
    const double h = 1e-6 * (1.0 + std::abs(x));
    const double deriv = (g_scan(delta, x + h) - g_scan(delta, x - h)) / (2 * h);
    double next = (deriv != 0.0) ? x - gx / deriv : a - 1.0;
    if (!(next > a && next < b)) next = 0.5 * (a + b);  // bisect fallback
    x = next;
  }
  return {0.5 * (a + b), true};
}

struct ContourWalker {
  const DeltaFn& delta;
  double scale;

  Complex eval(Complex rho) const {
    const Complex f = delta(rho * rho);
    if (std::abs(f) < 1e-13 * scale)
      throw ZeroOnContour("winding contour passes through a zero",
                          rho.real(), rho.imag());
    return f;
  }

  double phase(Complex za, Complex fa, Complex zb, Complex fb,
               int depth) const {
    const double dphi = std::arg(fb / fa);
    if (std::abs(dphi) < M_PI / 2.0) return dphi;
    if (depth >= 12)
      throw PhaseJumpUnresolved("phase step >= pi/2 after 12 bisections");
    const Complex zm = 0.5 * (za + zb);
    const Complex fm = eval(zm);
    return phase(za, fa, zm, fm, depth + 1) + phase(zm, fm, zb, fb, depth + 1);
  }
};

}  // namespace

std::vector<RealRoot> real_root_scan(const DeltaFn& delta, double lo,
                                     double hi,
                                     const RootSearchConfig& config) {
  std::vector<RealRoot> roots;
  if (!(hi > lo)) return roots;
  const int npts = std::max(
      2, static_cast<int>(std::ceil((hi - lo) * config.scan_points_per_unit)) +
             1);
  const double h = (hi - lo) / (npts - 1);

  std::vector<double> g(static_cast<size_t>(npts));
  parallel_for(static_cast<size_t>(npts), [&](std::size_t i) {
    g[i] = g_scan(delta, lo + double(i) * h);
  });

  std::vector<std::pair<double, double>> brackets;
  for (int i = 0; i + 1 < npts; ++i) {
    const double x0 = lo + i * h, x1 = lo + (i + 1) * h;
    if (g[size_t(i)] == 0.0) {
      roots.push_back({x0, false});
      continue;
    }
    if ((g[size_t(i)] < 0.0) != (g[size_t(i + 1)] < 0.0))
      brackets.emplace_back(x0, x1);
  }
  if (g.back() == 0.0) roots.push_back({hi, false});

  std::vector<RealRoot> refined(brackets.size());
  parallel_for(brackets.size(), [&](std::size_t i) {
    const auto [a, b] = brackets[i];
    refined[i] = refine_real(delta, a, b, g_scan(delta, a), config);
  });
  roots.insert(roots.end(), refined.begin(), refined.end());

  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.rho < b.rho; });
  std::vector<RealRoot> out;
  for (const auto& r : roots) {
    if (!out.empty() && std::abs(r.rho - out.back().rho) < 1e-8) continue;
    out.push_back(r);
  }
  return out;
}

int winding_count(const DeltaFn& delta, const RhoBox& box,
                  int samples_per_side) {
  const int n = std::max(4, samples_per_side);
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(4 * n) + 1);
  const Complex c00(box.re_lo, box.im_lo), c10(box.re_hi, box.im_lo);
  const Complex c11(box.re_hi, box.im_hi), c01(box.re_lo, box.im_hi);
  auto side = [&](Complex a, Complex b) {
    for (int k = 0; k < n; ++k)
      pts.push_back(a + (b - a) * (double(k) / n));
  };
  side(c00, c10);
  side(c10, c11);
  side(c11, c01);
  side(c01, c00);
  pts.push_back(c00);

  std::vector<Complex> f(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { f[i] = delta(pts[i] * pts[i]); });

  double scale = 0.0;
  for (const Complex& v : f) scale = std::max(scale, std::abs(v));
  if (scale == 0.0)
    throw ZeroOnContour("characteristic function vanishes on whole contour",
                        box.re_lo, box.im_lo);
  for (size_t i = 0; i < pts.size(); ++i)
    if (std::abs(f[i]) < 1e-13 * scale)
      throw ZeroOnContour("winding contour passes through a zero",
                          pts[i].real(), pts[i].imag());

  const ContourWalker walker{delta, scale};
  double total = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    total += walker.phase(pts[i], f[i], pts[i + 1], f[i + 1], 0);
  const double w = total / (2.0 * M_PI);
  const long rounded = std::lround(w);
  if (std::abs(w - double(rounded)) > 0.25)
    throw PhaseJumpUnresolved("winding total not near an integer");
  return static_cast<int>(rounded);
}

Complex refine_complex_root(const DeltaFn& delta, Complex seed,
                            const RhoBox& search_box,
                            const RootSearchConfig& config) {
  // doubled box about the center
  const double cre = 0.5 * (search_box.re_lo + search_box.re_hi);
  const double cim = 0.5 * (search_box.im_lo + search_box.im_hi);
  const double wre = search_box.re_hi - search_box.re_lo;
  const double wim = search_box.im_hi - search_box.im_lo;

  Complex z = seed;
  const double step_tol = 1e-12 * (1.0 + std::abs(seed));
  for (int it = 0; it < config.max_iter; ++it) {
    const Complex fz = delta(z * z);
    const double h = 1e-6 * (1.0 + std::abs(z));
    const Complex fp = (delta((z + h) * (z + h)) - delta((z - h) * (z - h))) /
                       (2.0 * h);
    if (fp == Complex(0.0, 0.0))
      throw NoConvergence("complex Newton: vanishing derivative");
    const Complex step = fz / fp;
    z -= step;
    if (std::abs(z.real() - cre) > wre || std::abs(z.imag() - cim) > wim)
      throw EscapedRegion("complex Newton left the doubled search box");
    if (std::abs(fz) <= config.newton_tol * (1.0 + std::abs(z)) &&
        std::abs(step) < step_tol)
      return z;
  }
  throw NoConvergence("complex Newton: iteration budget exhausted");
}

namespace {

struct BoxReport {
  int winding = 0;
  int real_found = 0;
  int complex_found = 0;
  int multiplicity_extra = 0;
};

}  // namespace

Spectrum compute_spectrum_fn(const DeltaFn& delta,
                             const RootSearchConfig& config) {
  if (config.m_max < 1)
    throw std::invalid_argument("compute_spectrum: m_max >= 1 required");

  // unit boxes centered on the integers, plus the stub [0, 1/2];
  // the imaginary axis itself stays outside the searched region
  std::vector<double> edges;
  edges.push_back(0.0);
  for (int k = 1; k <= config.m_max; ++k) edges.push_back(double(k) - 0.5);
  edges.push_back(double(config.m_max) + 0.5);
  const size_t nbox = edges.size() - 1;

  double height = config.im_height;
  std::vector<int> winding(nbox, 0);
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<int> w(nbox, 0);
      // boxes are independent; delta is pure
      parallel_for(nbox, [&](std::size_t k) {
        const RhoBox box{edges[k], edges[k + 1], -height, height};
        w[k] = winding_count(delta, box, config.winding_samples_per_side);
      });
      winding = std::move(w);
      break;
    } catch (const ZeroOnContour& z) {
      if (attempt >= 5) throw;
      if (std::abs(std::abs(z.sample_im) - height) < 1e-9) {
        height += 1e-3;
        continue;
      }
      size_t nearest = 0;
      double best = 1e300;
      for (size_t i = 0; i < edges.size(); ++i) {
        const double d = std::abs(edges[i] - z.sample_re);
        if (d < best) {
          best = d;
          nearest = i;
        }
      }
      edges[nearest] += 1e-3;
    }
  }

  // one global real scan; the rho prefactor of the scanned function
  // vanishes at 0, so start just inside
  std::vector<RealRoot> reals =
      real_root_scan(delta, std::max(edges.front(), 0.02), edges.back(), config);

  auto box_of = [&](double rho) -> int {
    if (rho < edges.front() || rho > edges.back()) return -1;
    const auto it = std::upper_bound(edges.begin(), edges.end(), rho);
    const int k = static_cast<int>(it - edges.begin()) - 1;
    return std::min(std::max(k, 0), static_cast<int>(nbox) - 1);
  };

  std::vector<BoxReport> report(nbox);
  std::vector<std::vector<RealRoot>> box_reals(nbox);
  for (const auto& r : reals) {
    const int k = box_of(r.rho);
    if (k < 0) continue;
    report[size_t(k)].real_found++;
    box_reals[size_t(k)].push_back(r);
  }
  for (size_t k = 0; k < nbox; ++k) report[k].winding = winding[k];

  // complex Newton for per-box deficits; roots come in conjugate pairs
  std::vector<Complex> complex_roots;  // Im > 0 representatives
  for (size_t k = 0; k < nbox; ++k) {
    int deficit = report[k].winding - report[k].real_found;
    if (deficit <= 0) continue;
    const RhoBox box{edges[k], edges[k + 1], -height, height};
    const double w = edges[k + 1] - edges[k];
    for (int si = 0; si < 3 && deficit > 0; ++si) {
      for (int sj = 0; sj < 3 && deficit > 0; ++sj) {
        const Complex seed(edges[k] + w * 0.25 * double(si + 1),
                           height * 0.25 * double(sj + 1));
        Complex z;
        try {
          z = refine_complex_root(delta, seed, box, config);
        } catch (const NoConvergence&) {
          continue;
        } catch (const EscapedRegion&) {
          continue;
        }
        if (std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z))) {
          // landed on a real root; count it if the scan missed it
          const double r = z.real();
          if (box_of(r) != static_cast<int>(k)) continue;
          bool known = false;
          for (const auto& rr : reals)
            if (std::abs(rr.rho - r) < 1e-8) known = true;
          if (!known) {
            reals.push_back({r, false});
            box_reals[k].push_back({r, false});
            report[k].real_found++;
            deficit--;
          }
          continue;
        }
        if (z.imag() < 0.0) z = std::conj(z);
        if (box_of(z.real()) != static_cast<int>(k)) continue;
        bool known = false;
        for (const Complex& c : complex_roots)
          if (std::abs(c - z) < 1e-8) known = true;
        if (known) continue;
        complex_roots.push_back(z);
        report[k].complex_found += 2;
        deficit -= 2;
      }
    }
  }

  // multiplicity probe: a shrunken box still reporting >= 2 zeros around
  // one refined point marks a multiple root
  std::vector<std::pair<Complex, int>> tagged;  // rho, multiplicity
  for (size_t k = 0; k < nbox; ++k) {
    int deficit =
        report[k].winding - report[k].real_found - report[k].complex_found;
    if (deficit <= 0) continue;
    for (auto& r : box_reals[k]) {
      const double eps = 5e-3;
      const RhoBox tiny{r.rho - eps, r.rho + eps, -eps, eps};
      int w = 0;
      try {
        w = winding_count(delta, tiny, config.winding_samples_per_side);
      } catch (...) {
        continue;
      }
      if (w >= 2) {
        tagged.emplace_back(Complex(r.rho, 0.0), w);
        report[k].multiplicity_extra += w - 1;
        deficit -= w - 1;
        if (deficit <= 0) break;
      }
    }
  }

  int total_roots = 0, total_winding = 0;
  for (size_t k = 0; k < nbox; ++k) {
    total_winding += report[k].winding;
    total_roots += report[k].real_found + report[k].complex_found +
                   report[k].multiplicity_extra;
  }
  if (total_roots != total_winding) {
    std::ostringstream os;
    os << "root count " << total_roots << " != winding total " << total_winding
       << "; per box (winding/real/complex):";
    for (size_t k = 0; k < nbox; ++k)
      os << " [" << edges[k] << "," << edges[k + 1] << "]:"
         << report[k].winding << "/" << report[k].real_found << "/"
         << report[k].complex_found;
    throw CountMismatch(os.str());
  }

  Spectrum spec;
  spec.m_max = config.m_max;
  for (const auto& r : reals) {
    if (box_of(r.rho) < 0) continue;
    SpectralPoint p = SpectralPoint::from_rho(Complex(r.rho, 0.0));
    p.low_precision = r.low_precision;
    for (const auto& [rt, mult] : tagged)
      if (std::abs(rt.real() - r.rho) < 1e-12) p.multiplicity = mult;
    spec.eigenvalues.push_back(p);
  }
  for (const Complex& z : complex_roots) {
    spec.eigenvalues.push_back(SpectralPoint::from_rho(std::conj(z)));
    spec.eigenvalues.push_back(SpectralPoint::from_rho(z));
  }
  spec.sort_and_index();
  return spec;
}

Spectrum compute_spectrum(const Potential& q, const FrozenArguments& F,
                          const RootSearchConfig& config) {
  const DeltaFn delta = [&q, &F](Complex lambda) {
    return delta_closed(q, F, lambda);
  };
  return compute_spectrum_fn(delta, config);
}

}  // namespace frosl
