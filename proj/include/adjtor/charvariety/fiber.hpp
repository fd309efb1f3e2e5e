#pragma once

#include "adjtor/charvariety/preset.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace adjtor {

/// The root of x + 1/x = z with |x| > 1; on the unit circle the one with
/// arg in [0, pi).  z = +-2 is non-generic.
Complex pick_x(const Complex& z);

/// Number of components of the boundary-parallel curve (1 for even p, else 2).
int d_gamma(int p, int q);

struct CharacterPoint {
  int component = 0;  // 0-based
  Complex y, m, l;
  double residual = 0.0;  // relative residual of (f, m^p l^q - x) after refinement
};

struct FiberResult {
  std::vector<CharacterPoint> points;  // canonical order
  std::vector<std::string> warnings;   // excluded or unconverged candidates
};

/// Solves f_i(y, m) = 0, m^p L_i(y, m)^q = x on every component: eliminate y
/// exactly (x kept symbolic, so the eliminant is cached per slope), find the
/// m-roots, lift them to y and refine by damped Newton.
class FiberSolver {
 public:
  explicit FiberSolver(const KnotPreset& preset);

  const KnotPreset& preset() const { return preset_; }

  FiberResult solve(int p, int q, const Complex& x);
  std::vector<CharacterPoint> solve_component(std::size_t component, int p, int q, const Complex& x,
                                              std::vector<std::string>* warnings = nullptr);

  /// R(m, x) = Res_y(f, m^p L^max(q,0) - x L^max(-q,0)) with L reduced mod f.
  const ExactPoly& eliminant(std::size_t component, int p, int q);

 private:
  struct Derivatives {
    NumericPoly f, f_y, f_m, L, L_y, L_m;
  };
  const Derivatives& derivatives(std::size_t component);

  KnotPreset preset_;
  std::map<std::tuple<std::size_t, int, int>, ExactPoly> eliminants_;
  std::map<std::size_t, std::pair<unsigned, Derivatives>> derivs_;
};

/// Orders points by component, then Re m, Im m, Re y, Im y (ties within a
/// relative 1e-9 are treated as equal).
void sort_canonical(std::vector<CharacterPoint>& points);

}  // namespace adjtor
