#pragma once

#include "adjtor/polycore/laurent.hpp"
#include "adjtor/torsion/chain.hpp"

namespace adjtor {

/// Point data for the slope change: (y, m, l) on the character variety and
/// x = m^p l^q.
struct SlopePoint {
  Complex y, m, l, x;
};

/// d u_gamma / d u_lambda = p (l/m) dm/dl + q with dm/dl = -A_l / A_m, where
/// A(m, l) is an A-polynomial factor vanishing at the point.
Complex slope_factor_apoly(const ExactPoly& apoly, int p, int q, const SlopePoint& pt);

/// Same factor through the bordered Jacobian of f(y, m), g = l - L(y, m),
/// h = m^p l^q - x:  (l/x) det d(f,g,h)/d(y,m,l) / det d(f,g)/d(y,m).
Complex slope_factor_bordered(const ExactPoly& riley, const ExactPoly& longitude, int p, int q,
                              const SlopePoint& pt);

/// det d(f,g,h)/d(y,m,l) for the system above.
Complex bordered_jacobian(const ExactPoly& riley, const ExactPoly& longitude, int p, int q, const SlopePoint& pt);

/// Tor(gamma) = factor * Tor(lambda).
TorsionValue slope_change(const TorsionValue& tor_lambda, const Complex& factor);

}  // namespace adjtor
