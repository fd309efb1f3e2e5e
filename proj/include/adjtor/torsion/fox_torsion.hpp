#pragma once

#include "adjtor/adjointrep/adjoint.hpp"
#include "adjtor/polycore/rational.hpp"
#include "adjtor/torsion/chain.hpp"

namespace adjtor {

struct TorsionPolynomial {
  RationalFunction raw;         // det(d2 without block j) / det Phi(g_j - 1)
  NormalizedRational normalized;
  int deleted_index;            // j, 1-based
};

/// Torsion polynomial via Fox calculus.  With j = 0 the first index whose
/// denominator is a nonzero polynomial is used.
TorsionPolynomial torsion_polynomial(const Presentation& pres, const Representation& rho, int j = 0);

/// Tor(lambda) = -d/dt at t = 1 of the torsion polynomial, after cancelling
/// the common (t - 1) factor.  Throws NonGenericError when the zero at t = 1
/// is not simple.
TorsionValue torsion_at_longitude(const Presentation& pres, const Representation& rho);

/// Same, starting from an already computed torsion polynomial.
TorsionValue torsion_at_longitude(const TorsionPolynomial& tp);

/// How the generic chain-complex torsion relates to the Fox polynomial at a
/// set of t0: chain(t0) = sign * t0^power * fox(t0) with the worst relative
/// deviation over the samples.
struct OracleAgreement {
  int sign = 1;
  int power = 0;
  double worst_relative = 0.0;
};

/// Uses the (-1)^(i+1) convention, which is the one matching the Fox ratio.
OracleAgreement compare_with_chain_complex(const Presentation& pres, const Representation& rho,
                                           const TorsionPolynomial& tp, const std::vector<Complex>& t0s);

}  // namespace adjtor
