// AVX2+FMA kernels.  sin/cos use the classic fdlibm reduction: round the
// argument to the nearest multiple of pi/2 with a two-part Cody-Waite
// constant, evaluate minimax polynomials on [-pi/4, pi/4], and patch the
// quadrant with blends and sign flips.  Accuracy is within a couple of ulp
// of libm for |x| up to ~1e6, far tighter than the 1e-12 equivalence bound
// the tests enforce.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "kernels_detail.hpp"

namespace apl::kernels::detail {

namespace {

const __m256d kTwoOverPi = _mm256_set1_pd(6.36619772367581382433e-01);
const __m256d kPio2_1 = _mm256_set1_pd(1.57079632673412561417e+00);
const __m256d kPio2_1t = _mm256_set1_pd(6.07710050650619224932e-11);

// fdlibm kernel coefficients
const __m256d kS1 = _mm256_set1_pd(-1.66666666666666324348e-01);
const __m256d kS2 = _mm256_set1_pd(8.33333333332248946124e-03);
const __m256d kS3 = _mm256_set1_pd(-1.98412698298579493134e-04);
const __m256d kS4 = _mm256_set1_pd(2.75573137070700676789e-06);
const __m256d kS5 = _mm256_set1_pd(-2.50507602534068634195e-08);
const __m256d kS6 = _mm256_set1_pd(1.58969099521155010221e-10);

const __m256d kC1 = _mm256_set1_pd(4.16666666666666019037e-02);
const __m256d kC2 = _mm256_set1_pd(-1.38888888888741095749e-03);
const __m256d kC3 = _mm256_set1_pd(2.48015872894767294178e-05);
const __m256d kC4 = _mm256_set1_pd(-2.75573143513906633035e-07);
const __m256d kC5 = _mm256_set1_pd(2.08757232129817482790e-09);
const __m256d kC6 = _mm256_set1_pd(-1.13596475577881948265e-11);

inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d kd = _mm256_round_pd(
      _mm256_mul_pd(x, kTwoOverPi),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(kd, kPio2_1, x);
  r = _mm256_fnmadd_pd(kd, kPio2_1t, r);

  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(kd));

  const __m256d z = _mm256_mul_pd(r, r);

  // sin(r) = r + r*z*(S1 + z*(S2 + ... ))
  __m256d ps = kS6;
  ps = _mm256_fmadd_pd(ps, z, kS5);
  ps = _mm256_fmadd_pd(ps, z, kS4);
  ps = _mm256_fmadd_pd(ps, z, kS3);
  ps = _mm256_fmadd_pd(ps, z, kS2);
  ps = _mm256_fmadd_pd(ps, z, kS1);
  const __m256d sin_r =
      _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

  // cos(r) = 1 - z/2 + z^2*(C1 + z*(C2 + ... ))
  __m256d pc = kC6;
  pc = _mm256_fmadd_pd(pc, z, kC5);
  pc = _mm256_fmadd_pd(pc, z, kC4);
  pc = _mm256_fmadd_pd(pc, z, kC3);
  pc = _mm256_fmadd_pd(pc, z, kC2);
  pc = _mm256_fmadd_pd(pc, z, kC1);
  __m256d cos_r = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc,
                                  _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5),
                                                   _mm256_set1_pd(1.0)));

  // quadrant fixup: q odd swaps sin/cos, bit 1 of q (resp. q+1) flips the
  // sign of sin (resp. cos)
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d s_base = _mm256_blendv_pd(sin_r, cos_r, swap);
  const __m256d c_base = _mm256_blendv_pd(cos_r, sin_r, swap);

  const __m256d sneg = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
  const __m256d cneg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(_mm256_add_epi64(q, one), two), two));

  const __m256d signbit = _mm256_set1_pd(-0.0);
  s_out = _mm256_xor_pd(s_base, _mm256_and_pd(sneg, signbit));
  c_out = _mm256_xor_pd(c_base, _mm256_and_pd(cneg, signbit));
}

void sincos_avx2(const double* x, std::size_t n, double* s, double* c) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d sv, cv;
    sincos4(_mm256_loadu_pd(x + i), sv, cv);
    _mm256_storeu_pd(s + i, sv);
    _mm256_storeu_pd(c + i, cv);
  }
  for (; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

void potential_avx2(const double* phi, std::size_t n, double a, double c,
                    int order, double* out) {
  const TrigPoly poly = potential_poly(a, c, order);
  const __m256d alpha = _mm256_set1_pd(poly.alpha);
  const __m256d beta = _mm256_set1_pd(poly.beta);
  const __m256d gamma = _mm256_set1_pd(poly.gamma);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s1, c1;
    sincos4(_mm256_loadu_pd(phi + i), s1, c1);
    const __m256d s2 = _mm256_mul_pd(_mm256_add_pd(s1, s1), c1);
    const __m256d c2 =
        _mm256_mul_pd(_mm256_sub_pd(c1, s1), _mm256_add_pd(c1, s1));
    __m256d r;
    if (poly.odd) {
      r = _mm256_mul_pd(alpha, s2);
      r = _mm256_fmadd_pd(beta, c2, r);
      r = _mm256_fmadd_pd(gamma, s1, r);
    } else {
      r = _mm256_mul_pd(alpha, c2);
      r = _mm256_fmadd_pd(beta, s2, r);
      r = _mm256_fmadd_pd(gamma, c1, r);
    }
    _mm256_storeu_pd(out + i, r);
  }
  if (i < n) {
    scalar_table().potential(phi + i, n - i, a, c, order, out + i);
  }
}

}  // namespace

Table avx2_table() { return Table{&sincos_avx2, &potential_avx2}; }

}  // namespace apl::kernels::detail
