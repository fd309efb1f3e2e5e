#pragma once

#include "adjtor/adjointrep/adjoint.hpp"
#include "adjtor/numeric/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adjtor {

/// Finite complex 0 -> C_n -> ... -> C_0 -> 0 over C with the standard
/// coordinate bases.  boundaries[i-1] is the matrix of d_i : C_i -> C_(i-1)
/// (dim C_(i-1) rows, dim C_i columns).  homology[i] holds column vectors in
/// C_i representing a basis of H_i (empty for acyclic degrees).
struct BasedChainComplex {
  std::vector<std::size_t> dims;
  std::vector<ComplexMatrix> boundaries;
  std::vector<ComplexMatrix> homology;

  void validate() const;
};

struct TorsionValue {
  Complex value;
  bool sign_fixed = false;
  std::optional<int> t_power_ambiguity;
  std::vector<std::string> warnings;
};

/// Exponent convention for the factor of degree i.
enum class TorsionConvention {
  alternating,          // prod_i [...]^((-1)^i)
  alternating_shifted,  // prod_i [...]^((-1)^(i+1))
};

struct ChainTorsionOptions {
  TorsionConvention convention = TorsionConvention::alternating;
  /// When set, b_i and the homology representatives are randomized with
  /// this seed; otherwise b_i are coordinate vectors picked by pivoting.
  std::optional<std::uint64_t> seed;
};

/// Sign-refined torsion of a based chain complex with homology bases,
/// including the sign (-1)^|C|.
TorsionValue chain_torsion(const BasedChainComplex& cx, const ChainTorsionOptions& options = {});

/// The presentation 2-complex with coefficients in sl2 twisted by t0:
/// C_2 = g^(n-1), C_1 = g^n, C_0 = g, with d_2 and d_1 assembled from Fox
/// derivatives and Phi(g_j - 1).
BasedChainComplex presentation_complex(const Presentation& pres, const Representation& rho, const Complex& t0);

}  // namespace adjtor
