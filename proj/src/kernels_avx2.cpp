#include <cmath>
#include <complex>

#include "frosl/kernels.hpp"

// AVX2 variants of the inner-loop kernels.  Four double lanes; trig and
// exp are evaluated in-register (Cody-Waite reduction + fdlibm/cephes
// polynomials) so the quadrature sums never leave SIMD registers.
// Tail elements and small sums fall back to the scalar formulas.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace frosl::kern {
namespace {

using Complex = std::complex<double>;

constexpr double kCutoff = 1e-4;

// pi/2 split into three 33-bit pieces; products with an integer-valued
// |fn| < 2^20 are exact.
constexpr double kPio2_1 = 1.57079632673412561417e+00;
constexpr double kPio2_2 = 6.07710050630396597660e-11;
constexpr double kPio2_3 = 2.02226624871116645580e-21;
constexpr double kInvPio2 = 6.36619772367581382433e-01;

// fdlibm kernel polynomials on |r| <= pi/4
constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

// cephes exp: e^r = 1 + 2r P(r^2) / (Q(r^2) - r P(r^2)) on |r| <= ln2/2
constexpr double kExpP0 = 1.26177193074810590878e-4;
constexpr double kExpP1 = 3.02994407707441961300e-2;
constexpr double kExpP2 = 9.99999999999999999910e-1;
constexpr double kExpQ0 = 3.00198505138664455042e-6;
constexpr double kExpQ1 = 2.52448340349684104192e-3;
constexpr double kExpQ2 = 2.27265548208155028766e-1;
constexpr double kExpQ3 = 2.00000000000000000005e0;
constexpr double kLog2E = 1.44269504088896340736e0;
constexpr double kLn2Hi = 6.93145751953125e-1;
constexpr double kLn2Lo = 1.42860682030941723212e-6;

inline __m256d mask_nonzero_epi32(__m128i v) {
  // lanes with v != 0 become all-ones double masks
  __m128i nz = _mm_cmpgt_epi32(v, _mm_setzero_si128());
  return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(nz));
}

inline __m256d flip_sign_where(__m256d v, __m256d mask) {
  return _mm256_xor_pd(v, _mm256_and_pd(mask, _mm256_set1_pd(-0.0)));
}

inline void vsincos4(__m256d x, __m256d* s_out, __m256d* c_out) {
  const __m256d fn = _mm256_round_pd(
      _mm256_mul_pd(x, _mm256_set1_pd(kInvPio2)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(fn, _mm256_set1_pd(kPio2_1), x);
  r = _mm256_fnmadd_pd(fn, _mm256_set1_pd(kPio2_2), r);
  r = _mm256_fnmadd_pd(fn, _mm256_set1_pd(kPio2_3), r);

  const __m256d y = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_set1_pd(kS6);
  ps = _mm256_fmadd_pd(ps, y, _mm256_set1_pd(kS5));
  ps = _mm256_fmadd_pd(ps, y, _mm256_set1_pd(kS4));
  ps = _mm256_fmadd_pd(ps, y, _mm256_set1_pd(kS3));
  ps = _mm256_fmadd_pd(ps, y, _mm256_set1_pd(kS2));
  ps = _mm256_fmadd_pd(ps, y, _mm256_set1_pd(kS1));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, y), ps, r);

  __m256d pc = _mm256_set1_pd(kC6);
  pc = _mm256_fmadd_pd(pc, y, _mm256_set1_pd(kC5));
  pc = _mm256_fmadd_pd(pc, y, _mm256_set1_pd(kC4));
  pc = _mm256_fmadd_pd(pc, y, _mm256_set1_pd(kC3));
  pc = _mm256_fmadd_pd(pc, y, _mm256_set1_pd(kC2));
  pc = _mm256_fmadd_pd(pc, y, _mm256_set1_pd(kC1));
  __m256d cos_r =
      _mm256_fnmadd_pd(y, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0));
  cos_r = _mm256_fmadd_pd(_mm256_mul_pd(y, y), pc, cos_r);

  const __m128i n = _mm256_cvtpd_epi32(fn);
  const __m128i one = _mm_set1_epi32(1);
  const __m128i two = _mm_set1_epi32(2);
  const __m256d swap = mask_nonzero_epi32(_mm_and_si128(n, one));
  const __m256d neg_s = mask_nonzero_epi32(_mm_and_si128(n, two));
  const __m256d neg_c =
      mask_nonzero_epi32(_mm_and_si128(_mm_add_epi32(n, one), two));

  const __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  const __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  *s_out = flip_sign_where(s, neg_s);
  *c_out = flip_sign_where(c, neg_c);
}

inline __m256d vexp4(__m256d x) {
  x = _mm256_min_pd(x, _mm256_set1_pd(708.0));
  x = _mm256_max_pd(x, _mm256_set1_pd(-708.0));
  const __m256d fn =
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(fn, _mm256_set1_pd(kLn2Hi), x);
  r = _mm256_fnmadd_pd(fn, _mm256_set1_pd(kLn2Lo), r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d px = _mm256_set1_pd(kExpP0);
  px = _mm256_fmadd_pd(px, rr, _mm256_set1_pd(kExpP1));
  px = _mm256_fmadd_pd(px, rr, _mm256_set1_pd(kExpP2));
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_set1_pd(kExpQ0);
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(kExpQ1));
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(kExpQ2));
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(kExpQ3));
  const __m256d e = _mm256_fmadd_pd(
      _mm256_set1_pd(2.0),
      _mm256_div_pd(px, _mm256_sub_pd(qx, px)), _mm256_set1_pd(1.0));

  // scale by 2^fn through the exponent field
  const __m128i n32 = _mm256_cvtpd_epi32(fn);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  n64 = _mm256_slli_epi64(n64, 52);
  return _mm256_mul_pd(e, _mm256_castsi256_pd(n64));
}

// sinh with the cancellation-free polynomial below |v| = 0.25
inline __m256d vsinh4(__m256d v, __m256d ev, __m256d ev_inv) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d direct = _mm256_mul_pd(half, _mm256_sub_pd(ev, ev_inv));
  const __m256d vv = _mm256_mul_pd(v, v);
  __m256d p = _mm256_set1_pd(1.0 / 362880.0);
  p = _mm256_fmadd_pd(p, vv, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, vv, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, vv, _mm256_set1_pd(1.0 / 6.0));
  const __m256d series = _mm256_fmadd_pd(_mm256_mul_pd(v, vv), p, v);
  const __m256d small = _mm256_cmp_pd(
      _mm256_andnot_pd(_mm256_set1_pd(-0.0), v), _mm256_set1_pd(0.25),
      _CMP_LT_OQ);
  return _mm256_blendv_pd(direct, series, small);
}

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// series kernel sin(z)/rho expressed through z: (z - z^3/6 + z^5/120)/rho
inline double series_sin_real(double z) {
  return z - z * z * z / 6.0 + z * z * z * z * z / 120.0;
}

Complex osc_sum_tiny_rho(const double* c, const double* dt, std::size_t n,
                         Complex rho) {
  // whole-sum series regime: result = m1 - rho^2 m3/6 + rho^4 m5/120
  __m256d m1 = _mm256_setzero_pd();
  __m256d m3 = _mm256_setzero_pd();
  __m256d m5 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cv = _mm256_loadu_pd(c + i);
    const __m256d x = _mm256_loadu_pd(dt + i);
    const __m256d x2 = _mm256_mul_pd(x, x);
    const __m256d cx = _mm256_mul_pd(cv, x);
    m1 = _mm256_add_pd(m1, cx);
    const __m256d cx3 = _mm256_mul_pd(cx, x2);
    m3 = _mm256_add_pd(m3, cx3);
    m5 = _mm256_fmadd_pd(cx3, x2, m5);
  }
  double s1 = hsum4(m1), s3 = hsum4(m3), s5 = hsum4(m5);
  for (; i < n; ++i) {
    const double x = dt[i];
    s1 += c[i] * x;
    s3 += c[i] * x * x * x;
    s5 += c[i] * x * x * x * x * x;
  }
  const Complex r2 = rho * rho;
  return s1 - r2 * s3 / 6.0 + r2 * r2 * s5 / 120.0;
}

Complex osc_sum_real_rho(const double* c, const double* dt, std::size_t n,
                         double r) {
  const __m256d rv = _mm256_set1_pd(r);
  const __m256d cut = _mm256_set1_pd(kCutoff);
  const __m256d absmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cv = _mm256_loadu_pd(c + i);
    const __m256d x = _mm256_loadu_pd(dt + i);
    const __m256d z = _mm256_mul_pd(rv, x);
    __m256d s, cdummy;
    vsincos4(z, &s, &cdummy);
    // series blend for |z| < cutoff
    const __m256d zz = _mm256_mul_pd(z, z);
    __m256d ser = _mm256_fmadd_pd(zz, _mm256_set1_pd(1.0 / 120.0),
                                  _mm256_set1_pd(-1.0 / 6.0));
    ser = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ser, z);
    const __m256d small =
        _mm256_cmp_pd(_mm256_andnot_pd(absmask, z), cut, _CMP_LT_OQ);
    s = _mm256_blendv_pd(s, ser, small);
    acc = _mm256_fmadd_pd(cv, s, acc);
  }
  double sum = hsum4(acc);
  for (; i < n; ++i) {
    const double z = r * dt[i];
    sum += c[i] * (std::abs(z) < kCutoff ? series_sin_real(z) : std::sin(z));
  }
  return Complex(sum / r, 0.0);
}

Complex osc_sum_imag_rho(const double* c, const double* dt, std::size_t n,
                         double b) {
  // sin(i b x)/(i b) = sinh(b x)/b, all real
  const __m256d bv = _mm256_set1_pd(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cv = _mm256_loadu_pd(c + i);
    const __m256d x = _mm256_loadu_pd(dt + i);
    const __m256d v = _mm256_mul_pd(bv, x);
    const __m256d ev = vexp4(v);
    const __m256d ev_inv = _mm256_div_pd(_mm256_set1_pd(1.0), ev);
    acc = _mm256_fmadd_pd(cv, vsinh4(v, ev, ev_inv), acc);
  }
  double sum = hsum4(acc);
  for (; i < n; ++i) sum += c[i] * std::sinh(b * dt[i]);
  return Complex(sum / b, 0.0);
}

Complex osc_sum_complex_rho(const double* c, const double* dt, std::size_t n,
                            Complex rho) {
  const double a = rho.real(), b = rho.imag();
  const __m256d av = _mm256_set1_pd(a);
  const __m256d bv = _mm256_set1_pd(b);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d absmask = _mm256_set1_pd(-0.0);
  const __m256d cut2 = _mm256_set1_pd(kCutoff * kCutoff);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cv = _mm256_loadu_pd(c + i);
    const __m256d x = _mm256_loadu_pd(dt + i);
    const __m256d u = _mm256_mul_pd(av, x);
    const __m256d v = _mm256_mul_pd(bv, x);
    __m256d su, cu;
    vsincos4(u, &su, &cu);
    const __m256d ev = vexp4(v);
    const __m256d ev_inv = _mm256_div_pd(_mm256_set1_pd(1.0), ev);
    const __m256d ch = _mm256_mul_pd(half, _mm256_add_pd(ev, ev_inv));
    const __m256d sh = vsinh4(v, ev, ev_inv);
    __m256d w_re = _mm256_mul_pd(su, ch);   // sin(u+iv) = sin u cosh v
    __m256d w_im = _mm256_mul_pd(cu, sh);   //           + i cos u sinh v
    // series blend for |z|^2 < cutoff^2: z(1 + z^2(-1/6 + z^2/120))
    const __m256d z2_re = _mm256_fnmadd_pd(v, v, _mm256_mul_pd(u, u));
    const __m256d z2_im =
        _mm256_mul_pd(_mm256_set1_pd(2.0), _mm256_mul_pd(u, v));
    const __m256d p_re = _mm256_fmadd_pd(z2_re, _mm256_set1_pd(1.0 / 120.0),
                                         _mm256_set1_pd(-1.0 / 6.0));
    const __m256d p_im = _mm256_mul_pd(z2_im, _mm256_set1_pd(1.0 / 120.0));
    const __m256d q_re = _mm256_add_pd(
        _mm256_set1_pd(1.0),
        _mm256_fnmadd_pd(z2_im, p_im, _mm256_mul_pd(z2_re, p_re)));
    const __m256d q_im =
        _mm256_fmadd_pd(z2_re, p_im, _mm256_mul_pd(z2_im, p_re));
    const __m256d s_re = _mm256_fnmadd_pd(v, q_im, _mm256_mul_pd(u, q_re));
    const __m256d s_im = _mm256_fmadd_pd(u, q_im, _mm256_mul_pd(v, q_re));
    const __m256d norm2 =
        _mm256_fmadd_pd(u, u, _mm256_mul_pd(v, v));
    const __m256d small = _mm256_cmp_pd(norm2, cut2, _CMP_LT_OQ);
    w_re = _mm256_blendv_pd(w_re, s_re, small);
    w_im = _mm256_blendv_pd(w_im, s_im, small);
    acc_re = _mm256_fmadd_pd(cv, w_re, acc_re);
    acc_im = _mm256_fmadd_pd(cv, w_im, acc_im);
  }
  Complex sum(hsum4(acc_re), hsum4(acc_im));
  for (; i < n; ++i) {
    const Complex z(a * dt[i], b * dt[i]);
    Complex w;
    if (std::norm(z) < kCutoff * kCutoff) {
      const Complex z2 = z * z;
      w = z * (1.0 + z2 * (-1.0 / 6.0 + z2 / 120.0));
    } else {
      w = std::sin(z);
    }
    sum += c[i] * w;
  }
  (void)absmask;
  return sum / rho;
}

Complex osc_sum_avx2(const double* c, const double* dt, std::size_t n,
                     Complex rho) {
  const double mag = std::abs(rho);
  if (mag < 1e-2) {
    double dtmax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      dtmax = std::max(dtmax, std::abs(dt[i]));
    if (mag * dtmax < kCutoff) return osc_sum_tiny_rho(c, dt, n, rho);
  }
  if (rho.imag() == 0.0) return osc_sum_real_rho(c, dt, n, rho.real());
  if (rho.real() == 0.0) return osc_sum_imag_rho(c, dt, n, rho.imag());
  return osc_sum_complex_rho(c, dt, n, rho);
}

void sine_series_avx2(const double* d, std::size_t modes, const double* t,
                      double* out, std::size_t n) {
  const __m256d pi = _mm256_set1_pd(M_PI);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d u = _mm256_sub_pd(pi, _mm256_loadu_pd(t + j));
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t m = 1; m <= modes; ++m) {
      __m256d s, cdummy;
      vsincos4(_mm256_mul_pd(_mm256_set1_pd(double(m)), u), &s, &cdummy);
      acc = _mm256_fmadd_pd(_mm256_set1_pd(d[m - 1]), s, acc);
    }
    _mm256_storeu_pd(out + j, acc);
  }
  for (; j < n; ++j) {
    const double u = M_PI - t[j];
    double acc = 0.0;
    for (std::size_t m = 1; m <= modes; ++m)
      acc += d[m - 1] * std::sin(double(m) * u);
    out[j] = acc;
  }
}

}  // namespace

namespace detail {

const Ops& avx2_ops() {
  static const Ops ops{&osc_sum_avx2, &sine_series_avx2};
  return ops;
}

}  // namespace detail
}  // namespace frosl::kern

#else  // non-x86 build: no AVX2 variant available

namespace frosl::kern::detail {

const Ops& avx2_ops() {
  static const Ops ops{nullptr, nullptr};
  return ops;
}

}  // namespace frosl::kern::detail

#endif
