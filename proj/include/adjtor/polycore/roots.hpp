#pragma once

#include "adjtor/numeric/complex.hpp"
#include "adjtor/polycore/laurent.hpp"

#include <vector>

namespace adjtor {

struct RootCluster {
  Complex center;
  int multiplicity = 1;
};

struct RootResult {
  std::vector<Complex> roots;          // with multiplicity, clusters repeated
  std::vector<RootCluster> clusters;   // distinct roots
  double worst_residual = 0.0;         // max |p(r)| / sum |c_k||r|^k
  int iterations = 0;
};

/// Roots of c[0] + c[1] z + ... + c[n] z^n (c[n] != 0).  Zero roots (trailing
/// zero coefficients) are dropped, matching the torus ambient.
RootResult polynomial_roots(std::vector<Complex> coeffs);

/// Roots in C^x of a univariate Laurent polynomial.
RootResult univariate_roots(const NumericPoly& p);

}  // namespace adjtor
