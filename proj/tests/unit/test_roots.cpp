#include "adjtor/polycore/parse.hpp"
#include "adjtor/polycore/roots.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <random>

using namespace adjtor;

namespace {

// Eigenvalues of the companion matrix: an independent root oracle.
std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

double nearest(const std::vector<Complex>& roots, std::complex<double> z) {
  double best = 1e300;
  for (const auto& r : roots) best = std::min(best, std::abs(r.to_std() - z));
  return best;
}

}  // namespace

TEST_CASE("random polynomials agree with the companion-matrix oracle") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    const int degree = 5 + 3 * trial;
    std::vector<std::complex<double>> c;
    std::vector<Complex> coeffs;
    for (int k = 0; k <= degree; ++k) {
      c.emplace_back(nd(rng), nd(rng));
      coeffs.emplace_back(c.back());
    }
    const RootResult r = polynomial_roots(coeffs);
    REQUIRE(r.roots.size() == static_cast<std::size_t>(degree));
    CHECK(r.worst_residual < 1e-13);
    for (const auto& z : companion_roots(c)) CHECK(nearest(r.roots, z) < 1e-8 * (1 + std::abs(z)));
  }
}

TEST_CASE("multiple roots are clustered") {
  // (z - 1)^3 (z + 2) = z^4 - z^3 - 3 z^2 + 5 z - 2
  const RootResult r = polynomial_roots({Complex(-2), Complex(5), Complex(-3), Complex(-1), Complex(1)});
  CHECK(r.roots.size() == 4);
  REQUIRE(r.clusters.size() == 2);
  int triple = 0;
  for (const auto& c : r.clusters)
    if (c.multiplicity == 3) {
      ++triple;
      CHECK(abs(c.center - Complex(1)) < Real(1e-5));
    }
  CHECK(triple == 1);
}

TEST_CASE("zero roots are dropped and Laurent shifts are honoured") {
  // z^2 (z - 3)
  const RootResult r = polynomial_roots({Complex(0), Complex(0), Complex(-3), Complex(1)});
  REQUIRE(r.roots.size() == 1);
  CHECK(abs(r.roots[0] - Complex(3)) < Real(1e-14));
  const NumericPoly p = to_numeric(parse_polynomial("m^2 - m^-2", {"m"}));
  CHECK(univariate_roots(p).roots.size() == 4);
}

TEST_CASE("roots refine at 128 bits") {
  PrecisionScope scope(128);
  const RootResult r = polynomial_roots({Complex(-2), Complex(0), Complex(1)});
  Real best = 1;
  for (const auto& z : r.roots) best = std::min(best, abs(z * z - Complex(2)));
  CHECK(best < Real(1e-35));
}
