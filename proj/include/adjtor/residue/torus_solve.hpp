#pragma once

#include "adjtor/polycore/laurent.hpp"

#include <array>
#include <vector>

namespace adjtor {

using TorusPoint = std::array<Complex, 2>;

struct TorusSolution {
  std::vector<TorusPoint> zeros;  // sorted by (Re z1, Im z1, Re z2, Im z2)
  double worst_residual = 0.0;
  int rejected = 0;               // converged candidates failing the residual test
};

/// Isolated zeros in (C^x)^2 of two Laurent polynomials in two variables:
/// eliminate the second variable by a numeric resultant, lift each root by
/// the roots of f1 in the second variable and refine by Newton.
TorusSolution solve_torus_system(const NumericPoly& f1, const NumericPoly& f2);

/// det d(f1, f2)/d(z1, z2) at a point.
Complex jacobian(const NumericPoly& f1, const NumericPoly& f2, const TorusPoint& z);

}  // namespace adjtor
