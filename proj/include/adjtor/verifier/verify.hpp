#pragma once

#include "adjtor/charvariety/fiber.hpp"
#include "adjtor/residue/khovanskii.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adjtor {

struct PointResult {
  CharacterPoint point;
  Complex tor_lambda;  // Tor(lambda) from the Fox torsion polynomial
  Complex factor;      // slope change factor
  Complex torsion;     // Tor(gamma) = factor * Tor(lambda), sign of the component applied
};

struct ComponentResult {
  int index = 0;
  int sign = 1;  // sigma applied to this component's torsions
  std::vector<PointResult> points;
  Complex inverse_sum;  // sum of 1 / torsion over the component (sign applied)
};

struct KhovanskiiReport {
  int p = 0, q = 0;
  Complex x;
  NondegeneracyReport nondegenerate;
  SimplicityReport simplicity;
  double closed_form_jacobian_mismatch = 0.0;  // max relative |Jac - closed form|
  ContainmentResult containment;
  ResidueSum residue;
  std::size_t zeros_from_fiber = 0;
  std::size_t zeros_from_resultant = 0;
  int epsilon = 0;                        // sign linking residue terms to 1/Tor
  double torsion_term_mismatch = 0.0;     // max relative |1/Tor - 2 eps x h/(m l Jac)|
  Verdict verdict = Verdict::pass;
};

struct IndexValue {
  int genus = 0;
  Complex value;
  double metric = 0.0;  // g = 0: |value| / max |(d Tor)^-1|; otherwise 0
};

struct VerificationReport {
  std::string preset;
  int p = 0, q = 0;
  std::optional<Complex> z;
  Complex x;
  unsigned precision_bits = 53;
  double tolerance = 1e-6;
  std::vector<ComponentResult> components;
  std::vector<Complex> sign_pairings;  // total sum for each sign assignment (first sign fixed to +1)
  Complex total_sum;
  double vanishing_metric = 0.0;
  Verdict verdict = Verdict::fail;
  std::optional<KhovanskiiReport> khovanskii;
  std::optional<std::vector<IndexValue>> index_values;
  double elapsed_ms = 0.0;
  std::vector<std::string> warnings;

  std::size_t point_count() const;
};

struct VerifyRequest {
  int p = 1, q = 0;
  std::optional<Complex> z;
  std::optional<Complex> x;  // overrides z when set
  unsigned precision_bits = 53;
  double tol = 1e-6;
  bool khovanskii = false;
  std::vector<int> genera;
};

/// Solves the trace fiber, computes Tor(gamma) at every point and judges
/// sum 1/Tor = 0 by |sum| / max |1/Tor|.  With several components the signs
/// sigma_i (sigma_0 = +1) minimizing the total are chosen and reported.
/// The solver is reused so eliminants are computed once per slope.
VerificationReport verify_vanishing(FiberSolver& solver, const VerifyRequest& request);
VerificationReport verify_vanishing(const std::string& knot, const VerifyRequest& request);

/// sum over the fiber of (d_gamma * Tor)^(g - 1), using the report's torsions.
IndexValue twisted_index(const VerificationReport& report, int genus);

/// Hypotheses and conclusion of the global residue theorem for the system
/// (A, m^p l^q - x) with h = m^2 - m^-2.  Needs a single-component preset
/// with an A-polynomial.
KhovanskiiReport khovanskii_certify(FiberSolver& solver, int p, int q, const Complex& x);

/// Tor(gamma) at one fiber point by the full pipeline with the component sign +1.
PointResult point_torsion(const KnotPreset& preset, const CharacterPoint& pt, int p, int q, const Complex& x);

}  // namespace adjtor
