#include "adjtor/kernels/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace adjtor::kernels;

namespace {

struct Batch {
  std::vector<double> cr, ci, zr, zi;
};

Batch random_batch(std::size_t ncoef, std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Batch b;
  for (std::size_t k = 0; k < ncoef; ++k) {
    b.cr.push_back(u(rng));
    b.ci.push_back(u(rng));
  }
  for (std::size_t k = 0; k < count; ++k) {
    b.zr.push_back(u(rng));
    b.zi.push_back(u(rng));
  }
  return b;
}

}  // namespace

TEST_CASE("scalar horner matches std::complex evaluation") {
  const Batch b = random_batch(9, 6, 1);
  std::vector<double> pr(6), pi(6), dr(6), di(6);
  scalar_kernels().horner(b.cr.data(), b.ci.data(), 9, b.zr.data(), b.zi.data(), 6, pr.data(), pi.data(), dr.data(),
                          di.data());
  for (std::size_t k = 0; k < 6; ++k) {
    const std::complex<double> z(b.zr[k], b.zi[k]);
    std::complex<double> p = 0, dp = 0;
    for (std::size_t j = 0; j < 9; ++j) {
      const std::complex<double> c(b.cr[j], b.ci[j]);
      p += c * std::pow(z, static_cast<int>(j));
      if (j > 0) dp += c * static_cast<double>(j) * std::pow(z, static_cast<int>(j) - 1);
    }
    CHECK(std::abs(std::complex<double>(pr[k], pi[k]) - p) < 1e-12 * (1 + std::abs(p)));
    CHECK(std::abs(std::complex<double>(dr[k], di[k]) - dp) < 1e-12 * (1 + std::abs(dp)));
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelSet* fast = avx2_kernels();
  if (!fast) {
    MESSAGE("AVX2 kernels not available on this build or CPU; scalar only");
    return;
  }
  // Counts around the lane width exercise the remainder loop.
  for (std::size_t count : {1u, 3u, 4u, 5u, 8u, 13u, 64u}) {
    for (std::size_t ncoef : {1u, 2u, 7u, 40u}) {
      const Batch b = random_batch(ncoef, count, static_cast<unsigned>(count * 100 + ncoef));
      std::vector<double> a(4 * count), c(4 * count);
      scalar_kernels().horner(b.cr.data(), b.ci.data(), ncoef, b.zr.data(), b.zi.data(), count, &a[0], &a[count],
                              &a[2 * count], &a[3 * count]);
      fast->horner(b.cr.data(), b.ci.data(), ncoef, b.zr.data(), b.zi.data(), count, &c[0], &c[count],
                   &c[2 * count], &c[3 * count]);
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - c[k]) <= 1e-13 * (1 + std::abs(a[k])));
    }
    const Batch b = random_batch(1, count, static_cast<unsigned>(count));
    std::vector<double> sr(count), si(count), fr(count), fi(count);
    scalar_kernels().aberth_sums(b.zr.data(), b.zi.data(), count, sr.data(), si.data());
    fast->aberth_sums(b.zr.data(), b.zi.data(), count, fr.data(), fi.data());
    for (std::size_t k = 0; k < count; ++k) {
      CHECK(std::abs(sr[k] - fr[k]) <= 1e-12 * (1 + std::abs(sr[k])));
      CHECK(std::abs(si[k] - fi[k]) <= 1e-12 * (1 + std::abs(si[k])));
    }
  }
}

TEST_CASE("active kernel set is one of the two") {
  const KernelSet& k = active_kernels();
  CHECK((&k == &scalar_kernels() || &k == avx2_kernels()));
}
