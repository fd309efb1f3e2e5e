// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "adjtor/kernels/kernels.hpp"

#include <immintrin.h>

namespace adjtor::kernels {

namespace {

void horner_avx2(const double* cr, const double* ci, std::size_t ncoef, const double* zr, const double* zi,
                 std::size_t count, double* pr, double* pi, double* dr, double* di) {
  std::size_t n = 0;
  for (; n + 4 <= count; n += 4) {
    const __m256d xr = _mm256_loadu_pd(zr + n);
    const __m256d xi = _mm256_loadu_pd(zi + n);
    __m256d vr = _mm256_set1_pd(cr[ncoef - 1]);
    __m256d vi = _mm256_set1_pd(ci[ncoef - 1]);
    __m256d wr = _mm256_setzero_pd();
    __m256d wi = _mm256_setzero_pd();
    for (std::size_t k = ncoef - 1; k-- > 0;) {
      // w = w*x + v
      const __m256d tr = _mm256_add_pd(_mm256_fmsub_pd(wr, xr, _mm256_mul_pd(wi, xi)), vr);
      wi = _mm256_add_pd(_mm256_fmadd_pd(wr, xi, _mm256_mul_pd(wi, xr)), vi);
      wr = tr;
      // v = v*x + c_k
      const __m256d ur = _mm256_add_pd(_mm256_fmsub_pd(vr, xr, _mm256_mul_pd(vi, xi)), _mm256_set1_pd(cr[k]));
      vi = _mm256_add_pd(_mm256_fmadd_pd(vr, xi, _mm256_mul_pd(vi, xr)), _mm256_set1_pd(ci[k]));
      vr = ur;
    }
    _mm256_storeu_pd(pr + n, vr);
    _mm256_storeu_pd(pi + n, vi);
    _mm256_storeu_pd(dr + n, wr);
    _mm256_storeu_pd(di + n, wi);
  }
  if (n < count) scalar_kernels().horner(cr, ci, ncoef, zr + n, zi + n, count - n, pr + n, pi + n, dr + n, di + n);
}

void aberth_avx2(const double* zr, const double* zi, std::size_t count, double* sr, double* si) {
  const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const __m256d ar_i = _mm256_set1_pd(zr[i]);
    const __m256d ai_i = _mm256_set1_pd(zi[i]);
    const __m256d self = _mm256_set1_pd(static_cast<double>(i));
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
      const __m256d d_r = _mm256_sub_pd(ar_i, _mm256_loadu_pd(zr + j));
      const __m256d d_i = _mm256_sub_pd(ai_i, _mm256_loadu_pd(zi + j));
      const __m256d norm = _mm256_fmadd_pd(d_r, d_r, _mm256_mul_pd(d_i, d_i));
      const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), lane);
      const __m256d keep = _mm256_cmp_pd(idx, self, _CMP_NEQ_OQ);
      const __m256d inv = _mm256_and_pd(keep, _mm256_div_pd(_mm256_set1_pd(1.0), norm));
      acc_r = _mm256_fmadd_pd(d_r, inv, acc_r);
      acc_i = _mm256_fnmadd_pd(d_i, inv, acc_i);
    }
    alignas(32) double br[4];
    alignas(32) double bi[4];
    _mm256_store_pd(br, acc_r);
    _mm256_store_pd(bi, acc_i);
    double sum_r = (br[0] + br[1]) + (br[2] + br[3]);
    double sum_i = (bi[0] + bi[1]) + (bi[2] + bi[3]);
    for (; j < count; ++j) {
      if (j == i) continue;
      const double d_r = zr[i] - zr[j];
      const double d_i = zi[i] - zi[j];
      const double inv = 1.0 / (d_r * d_r + d_i * d_i);
      sum_r += d_r * inv;
      sum_i -= d_i * inv;
    }
    sr[i] = sum_r;
    si[i] = sum_i;
  }
}

const KernelSet kAvx2{"avx2", horner_avx2, aberth_avx2};

}  // namespace

const KernelSet* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace adjtor::kernels
