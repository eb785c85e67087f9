// AVX2/FMA variants. This translation unit alone is compiled with -mavx2 -mfma;
// nothing here runs unless dispatch confirmed the CPU supports both.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace qframe::kernels {
namespace {

// Sign masks: xor flips the lanes holding -0.0.
inline __m256d sign_mask(bool s0, bool s1, bool s2, bool s3) {
  return _mm256_set_pd(s3 ? -0.0 : 0.0, s2 ? -0.0 : 0.0, s1 ? -0.0 : 0.0, s0 ? -0.0 : 0.0);
}

// Right products a*i, a*j, a*k as lane permutations of a with sign flips:
//   a i = (-a1,  a0,  a3, -a2)
//   a j = (-a2, -a3,  a0,  a1)
//   a k = (-a3,  a2, -a1,  a0)
struct RightUnits {
  __m256d a, ai, aj, ak;
};

inline RightUnits right_units(const double* q, __m256d mi, __m256d mj, __m256d mk) {
  const __m256d a = _mm256_loadu_pd(q);
  return {a, _mm256_xor_pd(_mm256_permute_pd(a, 0b0101), mi),
          _mm256_xor_pd(_mm256_permute2f128_pd(a, a, 0x01), mj),
          _mm256_xor_pd(_mm256_permute4x64_pd(a, 0x1B), mk)};
}

void qgemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, const Quaternion* a, const Quaternion* b,
                Quaternion* c) {
  const __m256d mi = sign_mask(true, false, false, true);
  const __m256d mj = sign_mask(true, true, false, false);
  const __m256d mk = sign_mask(true, false, true, false);
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);

  for (std::size_t r = 0; r < rows; ++r) {
    double* crow = cd + 4 * r * cols;
    for (std::size_t t = 0; t < inner; ++t) {
      const RightUnits u = right_units(ad + 4 * (r * inner + t), mi, mj, mk);
      const double* brow = bd + 4 * t * cols;
      std::size_t col = 0;
      for (; col + 2 <= cols; col += 2) {
        const double* b0 = brow + 4 * col;
        const double* b1 = b0 + 4;
        __m256d acc0 = _mm256_loadu_pd(crow + 4 * col);
        __m256d acc1 = _mm256_loadu_pd(crow + 4 * col + 4);
        acc0 = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 0), u.a, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_broadcast_sd(b1 + 0), u.a, acc1);
        acc0 = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 1), u.ai, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_broadcast_sd(b1 + 1), u.ai, acc1);
        acc0 = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 2), u.aj, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_broadcast_sd(b1 + 2), u.aj, acc1);
        acc0 = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 3), u.ak, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_broadcast_sd(b1 + 3), u.ak, acc1);
        _mm256_storeu_pd(crow + 4 * col, acc0);
        _mm256_storeu_pd(crow + 4 * col + 4, acc1);
      }
      for (; col < cols; ++col) {
        const double* b0 = brow + 4 * col;
        __m256d acc = _mm256_loadu_pd(crow + 4 * col);
        acc = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 0), u.a, acc);
        acc = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 1), u.ai, acc);
        acc = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 2), u.aj, acc);
        acc = _mm256_fmadd_pd(_mm256_broadcast_sd(b0 + 3), u.ak, acc);
        _mm256_storeu_pd(crow + 4 * col, acc);
      }
    }
  }
}

// (re + im i) * v for two packed complex values in v.
inline __m256d cmul_bcast(__m256d re, __m256d im, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(re, v, _mm256_mul_pd(im, swapped));
}

void cgemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b, cplx* c) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t r = 0; r < rows; ++r) {
    double* crow = cd + 2 * r * cols;
    cplx* crow_c = c + r * cols;
    for (std::size_t t = 0; t < inner; ++t) {
      const cplx av = a[r * inner + t];
      const __m256d re = _mm256_set1_pd(av.real());
      const __m256d im = _mm256_set1_pd(av.imag());
      const double* brow = bd + 2 * t * cols;
      std::size_t col = 0;
      for (; col + 2 <= cols; col += 2) {
        const __m256d vb = _mm256_loadu_pd(brow + 2 * col);
        const __m256d acc = _mm256_add_pd(_mm256_loadu_pd(crow + 2 * col), cmul_bcast(re, im, vb));
        _mm256_storeu_pd(crow + 2 * col, acc);
      }
      for (; col < cols; ++col) crow_c[col] += av * b[t * cols + col];
    }
  }
}

void crot2_avx2(std::size_t n, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11) {
  const __m256d r00 = _mm256_set1_pd(m00.real()), i00 = _mm256_set1_pd(m00.imag());
  const __m256d r01 = _mm256_set1_pd(m01.real()), i01 = _mm256_set1_pd(m01.imag());
  const __m256d r10 = _mm256_set1_pd(m10.real()), i10 = _mm256_set1_pd(m10.imag());
  const __m256d r11 = _mm256_set1_pd(m11.real()), i11 = _mm256_set1_pd(m11.imag());
  double* xd = reinterpret_cast<double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t t = 0;
  for (; t + 2 <= n; t += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * t);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * t);
    _mm256_storeu_pd(xd + 2 * t, _mm256_add_pd(cmul_bcast(r00, i00, xv), cmul_bcast(r01, i01, yv)));
    _mm256_storeu_pd(yd + 2 * t, _mm256_add_pd(cmul_bcast(r10, i10, xv), cmul_bcast(r11, i11, yv)));
  }
  for (; t < n; ++t) {
    const cplx xv = x[t];
    const cplx yv = y[t];
    x[t] = m00 * xv + m01 * yv;
    y[t] = m10 * xv + m11 * yv;
  }
}

}  // namespace

const KernelTable& avx2_table_unchecked() noexcept {
  static const KernelTable table{"avx2", &qgemm_avx2, &cgemm_avx2, &crot2_avx2};
  return table;
}

}  // namespace qframe::kernels
