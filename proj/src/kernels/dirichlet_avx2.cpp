// Compiled with -mavx2 -mfma; only called after avx2_available() succeeds.
#include "zetagb/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <array>

namespace zetagb::kernels {

namespace {

constexpr double inv_factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return 1.0 / f;
}

// exp(x), 4 lanes. Argument reduction x = k ln2 + r with |r| <= ln2/2, then a
// degree-13 Taylor polynomial (truncation < 1e-17) scaled by 2^k.
inline __m256d exp_pd(__m256d x) {
  x = _mm256_max_pd(_mm256_min_pd(x, _mm256_set1_pd(700.0)), _mm256_set1_pd(-700.0));
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(0.6931471805599453), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(2.3190468138462996e-17), r);

  __m256d p = _mm256_set1_pd(inv_factorial(13));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(12)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(11)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(10)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(9)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(8)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(7)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(6)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(5)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(4)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_factorial(3)));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  // 2^k: k + 1023 lands in the low mantissa bits of (k + 2^52 + 1023).
  __m256i bits = _mm256_castpd_si256(_mm256_add_pd(k, _mm256_set1_pd(4503599627370496.0 + 1023.0)));
  bits = _mm256_slli_epi64(bits, 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

// sin(x) and cos(x), 4 lanes. Three-part Cody-Waite reduction by pi/2 using
// FMA, Taylor polynomials on |r| <= pi/4, quadrant fix-up by lane masks.
inline void sincos_pd(__m256d x, __m256d* sin_out, __m256d* cos_out) {
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(0.6366197723675814)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(1.5707963267948966), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(6.123233995736766e-17), r);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(-1.4973849048591698e-33), r);
  const __m256d r2 = _mm256_mul_pd(r, r);

  // sin r = r + r^3 (-1/3! + r^2 (1/5! - ...)), through r^17.
  __m256d ps = _mm256_set1_pd(inv_factorial(17));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-inv_factorial(15)));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(inv_factorial(13)));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-inv_factorial(11)));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(inv_factorial(9)));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-inv_factorial(7)));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(inv_factorial(5)));
  ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-inv_factorial(3)));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, r2), r, r);

  // cos r = 1 - r^2/2 + r^4 (1/4! - ...), through r^18.
  __m256d pc = _mm256_set1_pd(-inv_factorial(18));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(inv_factorial(16)));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-inv_factorial(14)));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(inv_factorial(12)));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-inv_factorial(10)));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(inv_factorial(8)));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-inv_factorial(6)));
  pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(inv_factorial(4)));
  const __m256d r4 = _mm256_mul_pd(r2, r2);
  const __m256d cos_r =
      _mm256_fmadd_pd(pc, r4, _mm256_fnmadd_pd(r2, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0)));

  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k));
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_sign = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, two), 62));
  const __m256d cos_sign =
      _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), 62));

  *sin_out = _mm256_xor_pd(_mm256_blendv_pd(sin_r, cos_r, swap), sin_sign);
  *cos_out = _mm256_xor_pd(_mm256_blendv_pd(cos_r, sin_r, swap), cos_sign);
}

}  // namespace

Complex dirichlet_sum_avx2(std::span<const Real> log_n, Complex s) {
  const __m256d neg_sigma = _mm256_set1_pd(-s.real());
  const __m256d neg_t = _mm256_set1_pd(-s.imag());
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();

  const std::size_t n = log_n.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_loadu_pd(log_n.data() + i);
    const __m256d mag = exp_pd(_mm256_mul_pd(neg_sigma, l));
    __m256d sn, cs;
    sincos_pd(_mm256_mul_pd(neg_t, l), &sn, &cs);
    acc_re = _mm256_fmadd_pd(mag, cs, acc_re);
    acc_im = _mm256_fmadd_pd(mag, sn, acc_im);
  }

  alignas(32) std::array<double, 4> re_lanes;
  alignas(32) std::array<double, 4> im_lanes;
  _mm256_store_pd(re_lanes.data(), acc_re);
  _mm256_store_pd(im_lanes.data(), acc_im);
  Real re = (re_lanes[0] + re_lanes[1]) + (re_lanes[2] + re_lanes[3]);
  Real im = (im_lanes[0] + im_lanes[1]) + (im_lanes[2] + im_lanes[3]);

  for (; i < n; ++i) {
    const Complex term = std::exp(Complex(-s.real() * log_n[i], -s.imag() * log_n[i]));
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

}  // namespace zetagb::kernels

#else

namespace zetagb::kernels {

Complex dirichlet_sum_avx2(std::span<const Real> log_n, Complex s) {
  return dirichlet_sum_scalar(log_n, s);
}

}  // namespace zetagb::kernels

#endif
