#pragma once

#include "adjtor/residue/polytope.hpp"
#include "adjtor/residue/torus_solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adjtor {

enum class Verdict { pass, fail, indeterminate };
std::string to_string(Verdict v);

/// Truncations of a two-polynomial system along one direction beta.
struct FaceSystem {
  LatticePoint beta;
  std::vector<NumericPoly> truncations;
};

/// One beta per ray and per open two-dimensional cone of the common
/// refinement of the normal fans; truncations are constant on each.
std::vector<FaceSystem> face_systems(const std::vector<NumericPoly>& fs);

struct NondegeneracyReport {
  Verdict verdict = Verdict::pass;
  std::size_t faces_checked = 0;
  std::optional<LatticePoint> witness;  // beta of a face with a torus zero
  double min_margin = 0.0;              // smallest relative distance from a common face zero
  std::vector<std::string> notes;
};

/// Decides whether every face system (beta != 0) is free of torus zeros, which
/// for quasi-homogeneous truncations is the same as having only simple ones.
/// Monomial faces are vacuous, binomial pairs are decided from the exponent
/// lattice, longer truncations by comparing the roots of their univariate
/// reductions.  Margins in [1e-10, 1e-8] give an indeterminate verdict.
NondegeneracyReport check_nondegenerate(const std::vector<NumericPoly>& fs);

struct SimplicityReport {
  Verdict verdict = Verdict::pass;
  double min_jacobian = 0.0;  // min over zeros of |Jac| / scale
};

/// Jacobian of the system at every supplied zero, relative to the scale of
/// the partial derivatives.  Simple iff the minimum is >= 1e-8.
SimplicityReport jacobian_simplicity(const std::vector<NumericPoly>& fs, const std::vector<TorusPoint>& zeros);

/// Jac_(A,B) for the figure-eight system A = l + 1/l - m^4 + m^2 + 2 + m^-2 - m^-4,
/// B = m^p l^q - x in closed form: -(x/(m l)) (p (l - 1/l) + 2q (2m^2 - 1 + 2m^-2)(m^2 - m^-2)).
Complex figure_eight_jacobian(int p, int q, const Complex& x, const Complex& m, const Complex& l);

struct ResidueSum {
  Complex sum;
  Real max_term;
  Real mean_term;
  /// |sum| / mean term magnitude (zero when there are no terms).
  Real normalized() const;
};

/// sum over zeros a of h(a) / (a_1 ... a_n Jac(a)) for n polynomials in n
/// variables.  Throws NonGenericError at a zero with |Jac| < 1e-8 scale.
ResidueSum residue_sum(const std::vector<NumericPoly>& fs, const NumericPoly& h,
                       const std::vector<std::vector<Complex>>& zeros);
ResidueSum residue_sum(const std::vector<NumericPoly>& fs, const NumericPoly& h, const std::vector<TorusPoint>& zeros);

}  // namespace adjtor
