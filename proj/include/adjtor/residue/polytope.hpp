#pragma once

#include "adjtor/polycore/laurent.hpp"

#include <array>
#include <optional>
#include <vector>

namespace adjtor {

using LatticePoint = std::array<long, 2>;

/// Convex lattice polygon (possibly a segment or a point).  Vertices are
/// extreme points listed counterclockwise from the lexicographic minimum.
struct LatticePolytope {
  std::vector<LatticePoint> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
  /// Inward primitive normals of the edges, in edge order (empty for a point;
  /// two opposite normals for a segment).
  std::vector<LatticePoint> inward_normals() const;
  /// min over the polytope of <v, beta>.
  long support_min(const LatticePoint& beta) const;
  long support_max(const LatticePoint& beta) const;
};

/// Hull of arbitrary lattice points.
LatticePolytope convex_hull(std::vector<LatticePoint> points);

/// Hull of the exponent vectors of a two-variable Laurent polynomial.
template <class C>
LatticePolytope newton_polytope(const LaurentPoly<C>& p) {
  if (p.nvars() != 2) throw StructuralError("newton_polytope: only two variables are supported");
  if (p.is_zero()) throw DomainError("newton_polytope of the zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : p.terms()) pts.push_back({e[0], e[1]});
  return convex_hull(std::move(pts));
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

struct ContainmentResult {
  bool strict = false;
  /// Outward facet normal of `outer` along which `inner` reaches the boundary.
  std::optional<LatticePoint> witness;
};

/// True iff inner lies in the interior of outer.  A degenerate outer (point or
/// segment) has empty interior.
ContainmentResult strict_containment(const LatticePolytope& inner, const LatticePolytope& outer);

/// Terms of p whose exponents minimize <alpha, beta>.
template <class C>
LaurentPoly<C> truncation(const LaurentPoly<C>& p, const LatticePoint& beta) {
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const long v = beta[0] * e[0] + beta[1] * e[1];
    if (first || v < best) best = v;
    first = false;
  }
  LaurentPoly<C> out(p.variables());
  for (const auto& [e, c] : p.terms())
    if (beta[0] * e[0] + beta[1] * e[1] == best) out.add_term(e, c);
  return out;
}

}  // namespace adjtor
