#pragma once

// Batched double-precision kernels for the root finder.  Data is laid out as
// separate real and imaginary arrays so the AVX2 variant can load four lanes
// at a time.  The scalar functions are the reference; the AVX2 set is picked
// at runtime when the CPU supports AVX2 and FMA.

#include <cstddef>

namespace adjtor::kernels {

/// Evaluates p(z) and p'(z) for count points, with p(z) = sum coef[k] z^k
/// (ncoef = degree + 1, ncoef >= 1).
using HornerFn = void (*)(const double* coef_re, const double* coef_im, std::size_t ncoef,
                          const double* z_re, const double* z_im, std::size_t count,
                          double* p_re, double* p_im, double* dp_re, double* dp_im);

/// s[i] = sum over j != i of 1 / (z[i] - z[j]).
using AberthSumFn = void (*)(const double* z_re, const double* z_im, std::size_t count,
                             double* s_re, double* s_im);

struct KernelSet {
  const char* name;
  HornerFn horner;
  AberthSumFn aberth_sums;
};

const KernelSet& scalar_kernels();

/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelSet* avx2_kernels();

/// AVX2 when available, scalar otherwise.  ADJTOR_KERNELS=scalar forces the
/// reference path.
const KernelSet& active_kernels();

}  // namespace adjtor::kernels
