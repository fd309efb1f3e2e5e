#include "adjtor/residue/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace adjtor {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

long dot(const LatticePoint& a, const LatticePoint& b) { return a[0] * b[0] + a[1] * b[1]; }

LatticePoint primitive(long a, long b) {
  const long g = std::gcd(std::abs(a), std::abs(b));
  return g == 0 ? LatticePoint{0, 0} : LatticePoint{a / g, b / g};
}

}  // namespace

LatticePolytope convex_hull(std::vector<LatticePoint> pts) {
  if (pts.empty()) throw DomainError("convex hull of no points");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts};
  // Andrew's monotone chain; collinear points are dropped.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // All points collinear: the chain degenerates to the two endpoints.
  if (hull.size() == 2 || (hull.size() > 2 && cross(hull[0], hull[1], hull[2]) == 0)) {
    return {{pts.front(), pts.back()}};
  }
  return {hull};
}

std::vector<LatticePoint> LatticePolytope::inward_normals() const {
  std::vector<LatticePoint> out;
  if (vertices.size() < 2) return out;
  if (vertices.size() == 2) {
    const LatticePoint n = primitive(-(vertices[1][1] - vertices[0][1]), vertices[1][0] - vertices[0][0]);
    out.push_back(n);
    out.push_back({-n[0], -n[1]});
    return out;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % vertices.size()];
    // Interior lies to the left of a counterclockwise edge.
    out.push_back(primitive(-(b[1] - a[1]), b[0] - a[0]));
  }
  return out;
}

long LatticePolytope::support_min(const LatticePoint& beta) const {
  long best = dot(vertices.front(), beta);
  for (const auto& v : vertices) best = std::min(best, dot(v, beta));
  return best;
}

long LatticePolytope::support_max(const LatticePoint& beta) const {
  long best = dot(vertices.front(), beta);
  for (const auto& v : vertices) best = std::max(best, dot(v, beta));
  return best;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<LatticePoint> pts;
  pts.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) pts.push_back({u[0] + v[0], u[1] + v[1]});
  return convex_hull(std::move(pts));
}

ContainmentResult strict_containment(const LatticePolytope& inner, const LatticePolytope& outer) {
  if (outer.vertices.size() < 3) {
    // No interior.  Report a normal of the degenerate outer as witness.
    const auto normals = outer.inward_normals();
    if (normals.empty()) return {false, LatticePoint{1, 0}};
    return {false, LatticePoint{-normals[0][0], -normals[0][1]}};
  }
  for (const auto& n : outer.inward_normals()) {
    const LatticePoint outward{-n[0], -n[1]};
    if (inner.support_max(outward) >= outer.support_max(outward)) return {false, outward};
  }
  return {true, std::nullopt};
}

}  // namespace adjtor
