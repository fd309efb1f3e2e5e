#include "adjtor/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace adjtor::kernels {

namespace {

void horner_scalar(const double* cr, const double* ci, std::size_t ncoef, const double* zr, const double* zi,
                   std::size_t count, double* pr, double* pi, double* dr, double* di) {
  for (std::size_t n = 0; n < count; ++n) {
    const double xr = zr[n];
    const double xi = zi[n];
    double vr = cr[ncoef - 1];
    double vi = ci[ncoef - 1];
    double wr = 0.0;
    double wi = 0.0;
    for (std::size_t k = ncoef - 1; k-- > 0;) {
      const double tr = wr * xr - wi * xi + vr;
      wi = wr * xi + wi * xr + vi;
      wr = tr;
      const double ur = vr * xr - vi * xi + cr[k];
      vi = vr * xi + vi * xr + ci[k];
      vr = ur;
    }
    pr[n] = vr;
    pi[n] = vi;
    dr[n] = wr;
    di[n] = wi;
  }
}

void aberth_scalar(const double* zr, const double* zi, std::size_t count, double* sr, double* si) {
  for (std::size_t i = 0; i < count; ++i) {
    double ar = 0.0;
    double ai = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      const double dr = zr[i] - zr[j];
      const double di = zi[i] - zi[j];
      const double inv = 1.0 / (dr * dr + di * di);
      ar += dr * inv;
      ai -= di * inv;
    }
    sr[i] = ar;
    si[i] = ai;
  }
}

const KernelSet kScalar{"scalar", horner_scalar, aberth_scalar};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

#if !defined(ADJTOR_HAVE_AVX2)
const KernelSet* avx2_kernels() { return nullptr; }
#endif

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("ADJTOR_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
    const KernelSet* simd = avx2_kernels();
    return simd != nullptr ? simd : &kScalar;
  }();
  return *chosen;
}

}  // namespace adjtor::kernels
