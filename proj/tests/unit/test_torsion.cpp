#include "adjtor/charvariety/preset.hpp"
#include "adjtor/torsion/chain.hpp"
#include "adjtor/torsion/fox_torsion.hpp"
#include "adjtor/torsion/slope.hpp"

#include <doctest.h>

using namespace adjtor;

namespace {

ComplexMatrix one_by_one(const Complex& a) {
  ComplexMatrix m(1, 1);
  m(0, 0) = a;
  return m;
}

// Figure-eight torsion polynomial by hand: (t-1)(2m^2 - (t - 1 + 1/t) + 2m^-2) / t^2.
Complex figure_eight_poly(const Complex& m, const Complex& t) {
  const Complex m2 = m * m;
  return (t - Complex(1)) * (Complex(2) * m2 - (t - Complex(1) + Complex(1) / t) + Complex(2) / m2) / (t * t);
}

}  // namespace

TEST_CASE("one-boundary complex") {
  const Complex a(2.5, -0.5);
  BasedChainComplex cx{{1, 1}, {one_by_one(a)}, {}};
  const TorsionValue v = chain_torsion(cx);
  CHECK((relative_distance(v.value, a) < Real(1e-15) || relative_distance(v.value, -a) < Real(1e-15)));
  ChainTorsionOptions r1, r2;
  r1.seed = 1;
  r2.seed = 99;
  CHECK(relative_distance(chain_torsion(cx, r1).value, chain_torsion(cx, r2).value) < Real(1e-13));
}

TEST_CASE("chain torsion is independent of the random b choices") {
  const KnotPreset p = load_preset("4_1");
  const auto pt = sample_riley_points(p.components[0].riley, 1, 4)[0];
  const BasedChainComplex cx =
      presentation_complex(p.presentation, two_bridge_representation(pt.y, pt.m), Complex(0.8, 0.3));
  ChainTorsionOptions a, b;
  a.seed = 3;
  b.seed = 17;
  CHECK(relative_distance(chain_torsion(cx, a).value, chain_torsion(cx, b).value) < Real(1e-11));
  CHECK(relative_distance(chain_torsion(cx, a).value, chain_torsion(cx).value) < Real(1e-11));
}

TEST_CASE("malformed complexes are rejected") {
  BasedChainComplex bad{{1, 2}, {one_by_one(Complex(1))}, {}};
  CHECK_THROWS_AS(chain_torsion(bad), StructuralError);
}

TEST_CASE("figure-eight torsion polynomial matches the closed form up to +-t^k") {
  const KnotPreset p = load_preset("4_1");
  for (const auto& pt : sample_riley_points(p.components[0].riley, 4, 12)) {
    const TorsionPolynomial tp = torsion_polynomial(p.presentation, two_bridge_representation(pt.y, pt.m));
    const Complex t1(0.9, 0.4), t2(-1.3, 0.6);
    const Complex r1 = tp.raw(t1) / figure_eight_poly(pt.m, t1);
    const Complex r2 = tp.raw(t2) / figure_eight_poly(pt.m, t2);
    bool matched = false;
    for (int k = -6; k <= 6 && !matched; ++k)
      for (int s : {1, -1}) {
        const Complex f1 = Complex(s) * pow(t1, k), f2 = Complex(s) * pow(t2, k);
        if (relative_distance(r1, f1) < Real(1e-10) && relative_distance(r2, f2) < Real(1e-10)) matched = true;
      }
    CHECK(matched);
  }
}

TEST_CASE("torsion polynomial vanishes at t = 1 and gives Tor(lambda)") {
  const KnotPreset p = load_preset("4_1");
  for (const auto& pt : sample_riley_points(p.components[0].riley, 5, 21)) {
    const Representation rho = two_bridge_representation(pt.y, pt.m);
    const TorsionPolynomial tp = torsion_polynomial(p.presentation, rho);
    // The raw ratio is 0/0 at t = 1; after cancelling it still has a simple zero.
    RationalFunction r = tp.raw;
    CHECK(r.cancel_common_root(Complex(1), Real(1e-8)) >= 1);
    CHECK(abs(r(Complex(1))) < Real(1e-10));
    const Complex m2 = pt.m * pt.m;
    const Complex closed = Complex(2) * m2 - Complex(1) + Complex(2) / m2;
    CHECK(relative_distance(torsion_at_longitude(tp).value, closed) < Real(1e-11));
  }
}

TEST_CASE("twist-knot Tor(lambda) matches the rational closed form up to sign") {
  const KnotPreset p = load_preset("5_2");
  for (const auto& pt : sample_riley_points(p.components[0].riley, 4, 8)) {
    const Complex t = torsion_at_longitude(p.presentation, two_bridge_representation(pt.y, pt.m)).value;
    const Complex y = pt.y;
    const Complex closed =
        (Complex(5) * y * y * y - Complex(21) * y * y + Complex(28) * y - Complex(14)) / (y - Complex(1));
    CHECK(std::min(relative_distance(t, closed), relative_distance(t, -closed)) < Real(1e-10));
  }
}

TEST_CASE("slope factor: A-polynomial route equals the bordered Jacobian route") {
  const KnotPreset p = load_preset("4_1");
  const PresetComponent& c = p.components[0];
  for (const auto& pt : sample_riley_points(c.riley, 4, 33)) {
    const Complex l = evaluate(c.longitude, {pt.y, pt.m});
    for (auto [pp, qq] : {std::pair{1, 0}, {0, 1}, {3, 1}, {2, -5}}) {
      const SlopePoint sp{pt.y, pt.m, l, pow(pt.m, pp) * pow(l, qq)};
      const Complex a = slope_factor_apoly(*c.apoly, pp, qq, sp);
      const Complex b = slope_factor_bordered(c.riley, c.longitude, pp, qq, sp);
      CHECK(relative_distance(a, b) < Real(1e-10));
      if (pp == 0) CHECK(relative_distance(a, Complex(qq)) < Real(1e-12));
    }
  }
}

TEST_CASE("slope change multiplies") {
  TorsionValue t;
  t.value = Complex(2, 1);
  CHECK(slope_change(t, Complex(0, 3)).value == Complex(-3, 6));
}
