#include "adjtor/polycore/parse.hpp"
#include "adjtor/residue/khovanskii.hpp"
#include "adjtor/residue/polytope.hpp"
#include "adjtor/residue/torus_solve.hpp"

#include <doctest.h>

using namespace adjtor;

namespace {

const Variables kUV{"u", "v"};

NumericPoly N(const std::string& s) { return to_numeric(parse_polynomial(s, kUV)); }

// Twice the lattice area, by the shoelace formula.
long twice_area(const LatticePolytope& p) {
  long s = 0;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    const auto& a = p.vertices[k];
    const auto& b = p.vertices[(k + 1) % p.vertices.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s;
}

}  // namespace

TEST_CASE("convex hull") {
  const LatticePolytope sq = convex_hull({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 0}});
  CHECK(sq.vertices == std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(twice_area(sq) == 8);
  CHECK(convex_hull({{1, 1}, {1, 1}}).is_point());
  const LatticePolytope seg = convex_hull({{0, 0}, {3, 3}, {1, 1}});
  CHECK(seg.is_segment());
  CHECK(seg.inward_normals().size() == 2);
  CHECK(sq.support_min({1, 1}) == 0);
  CHECK(sq.support_max({1, -1}) == 2);
}

TEST_CASE("Minkowski sum") {
  const LatticePolytope tri = convex_hull({{0, 0}, {1, 0}, {0, 1}});
  const LatticePolytope seg = convex_hull({{0, 0}, {2, 0}});
  const LatticePolytope s = minkowski_sum(tri, seg);
  CHECK(s.vertices == std::vector<LatticePoint>{{0, 0}, {3, 0}, {2, 1}, {0, 1}});
  // Mixed area: area(A+B) - area(A) - area(B) is the BKK count for generic coefficients.
  CHECK(twice_area(minkowski_sum(tri, tri)) == 4 * twice_area(tri));
}

TEST_CASE("strict containment") {
  const LatticePolytope big = convex_hull({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}});
  CHECK(strict_containment(convex_hull({{-1, 0}, {1, 0}}), big).strict);
  const ContainmentResult touch = strict_containment(convex_hull({{0, 0}, {2, 1}}), big);
  CHECK_FALSE(touch.strict);
  REQUIRE(touch.witness.has_value());
  CHECK(*touch.witness == LatticePoint{1, 0});
  CHECK_FALSE(strict_containment(convex_hull({{0, 0}}), convex_hull({{-1, 0}, {1, 0}})).strict);
}

TEST_CASE("truncations and face systems") {
  const NumericPoly f = N("u^2 + u*v + v^-1 + 3");
  CHECK(truncation(f, {1, 0}).size() == 2);  // min of u-exponent: v^-1 and 3
  CHECK(truncation(f, {0, 1}) == N("v^-1"));
  const auto faces = face_systems({f, N("u - v + 1")});
  CHECK(faces.size() >= 4);
  for (const auto& face : faces) {
    CHECK((face.beta[0] != 0 || face.beta[1] != 0));
    CHECK(face.truncations.size() == 2);
  }
}

TEST_CASE("non-degeneracy decisions") {
  // Generic dense pair: every face pair is free of torus zeros.
  const NondegeneracyReport good = check_nondegenerate({N("u + 2*v + 3"), N("u - v + 5")});
  CHECK(good.verdict == Verdict::pass);
  // Leading forms u + v and u + v share the torus zero u = -v.
  const NondegeneracyReport bad = check_nondegenerate({N("u + v + 1"), N("u + v + 2")});
  CHECK(bad.verdict == Verdict::fail);
  CHECK(bad.witness.has_value());
  // Binomial faces: u^2 - v and u^4 - v^2 share the curve v = u^2.
  CHECK(check_nondegenerate({N("u^2 - v + 1"), N("u^4 - v^2 + u")}).verdict == Verdict::fail);
}

TEST_CASE("torus solve against the mixed area") {
  // Two generic dense quadrics: 4 zeros.
  const NumericPoly f = N("u^2 + 3*u*v - v^2 + 2*u - v + 1.5");
  const NumericPoly g = N("2*u^2 - u*v + v^2 - u + 3*v - 0.7");
  const TorusSolution s = solve_torus_system(f, g);
  CHECK(s.zeros.size() == 4);
  for (const auto& z : s.zeros) {
    CHECK(abs(evaluate(f, {z[0], z[1]})) < Real(1e-10));
    CHECK(abs(evaluate(g, {z[0], z[1]})) < Real(1e-10));
  }
}

TEST_CASE("one-variable residue example") {
  // h/(z f') over the zeros of (z-1)(z-2): 1/(1 * -1) + 2/(2 * 1) = 0.
  const Variables z{"z"};
  const NumericPoly f = to_numeric(parse_polynomial("z^2 - 3*z + 2", z));
  const NumericPoly h = to_numeric(parse_polynomial("z", z));
  const ResidueSum s = residue_sum({f}, h, std::vector<std::vector<Complex>>{{Complex(1)}, {Complex(2)}});
  CHECK(abs(s.sum) < Real(1e-15));
  CHECK(s.mean_term.convert_to<double>() == doctest::Approx(1.0));
  // h = z^2 reaches the boundary of the Newton polytope [0, 2]: no cancellation.
  const NumericPoly h2 = to_numeric(parse_polynomial("z^2", z));
  CHECK(residue_sum({f}, h2, std::vector<std::vector<Complex>>{{Complex(1)}, {Complex(2)}}).normalized() > Real(0.5));
}

TEST_CASE("two-variable residue theorem on an admissible system") {
  const NumericPoly f = N("u^2 + 3*u*v - v^2 + 2*u - v + 1.5");
  const NumericPoly g = N("2*u^2 - u*v + v^2 - u + 3*v - 0.7");
  const TorusSolution s = solve_torus_system(f, g);
  // Delta(h) = {(1,1)} lies inside Delta(f) + Delta(g) = 2 * (2-simplex at the origin) interior.
  const ResidueSum r = residue_sum({f, g}, N("u*v"), s.zeros);
  CHECK(r.normalized() < Real(1e-9));
  CHECK(strict_containment(newton_polytope(N("u*v")), minkowski_sum(newton_polytope(f), newton_polytope(g))).strict);
  const ResidueSum boundary = residue_sum({f, g}, N("1"), s.zeros);
  CHECK(boundary.normalized() > Real(1e-3));
}

TEST_CASE("figure-eight Jacobian closed form") {
  const NumericPoly a = to_numeric(parse_polynomial("l + l^-1 + (-m^-4 + m^-2 + 2 + m^2 - m^4)", {"m", "l"}));
  const Complex x(1.2, 0.9);
  for (auto [p, q] : {std::pair{1, 1}, {3, -2}}) {
    NumericPoly b = NumericPoly::monomial({"m", "l"}, {p, q}, Complex(1));
    b.add_term({0, 0}, -x);
    for (const auto& z : solve_torus_system(a, b).zeros)
      CHECK(relative_distance(jacobian(a, b, z), figure_eight_jacobian(p, q, x, z[0], z[1])) < Real(1e-10));
  }
}
