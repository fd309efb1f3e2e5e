#include "adjtor/adjointrep/adjoint.hpp"
#include "adjtor/charvariety/preset.hpp"
#include "adjtor/foxcalc/group_ring.hpp"
#include "adjtor/foxcalc/presentation.hpp"
#include "adjtor/foxcalc/word.hpp"

#include <doctest.h>

using namespace adjtor;

namespace {

GroupRingElement ring(std::initializer_list<std::pair<const char*, long>> terms) {
  GroupRingElement e;
  for (const auto& [w, c] : terms) e.add(parse_word(w), c);
  return e;
}

}  // namespace

TEST_CASE("words are freely reduced") {
  CHECK(parse_word("g1 g2 g2^-1 g1^-1").is_identity());
  CHECK(parse_word("g1^3").length() == 3);
  CHECK(parse_word("1").is_identity());
  const Word w = parse_word("g1 g2^-1 g1");
  CHECK((w * w.inverse()).is_identity());
  CHECK(w.exponent_sum() == 1);
  CHECK(w.max_generator() == 2);
  CHECK(to_string(parse_word("g1^2 g2^-1")) == "g1 g1 g2^-1");
  CHECK_THROWS(parse_word("h1"));
}

TEST_CASE("fox derivative basics") {
  CHECK(fox_derivative(Word::generator(1), 1) == GroupRingElement::one());
  CHECK(fox_derivative(Word::generator(1), 2).is_zero());
  CHECK(fox_derivative(Word::generator(1, -1), 1) == GroupRingElement(Word::generator(1, -1), -1));
  // d(uv) = du + u dv
  const Word u = parse_word("g1 g2^-1"), v = parse_word("g2 g2 g1^-1");
  for (int j = 1; j <= 2; ++j)
    CHECK(fox_derivative(u * v, j) == fox_derivative(u, j) + GroupRingElement(u) * fox_derivative(v, j));
}

TEST_CASE("fundamental formula: sum_j (dw/dg_j)(g_j - 1) = w - 1") {
  for (const char* text : {"g1 g2 g1^-1 g2^-1", "g2^-1 g1^3 g2 g1^-2", "g1^-1 g2 g1 g2^-1 g1 g2 g1^-1 g2^-1 g1 g2^-1"}) {
    const Word w = parse_word(text);
    GroupRingElement lhs;
    for (int j = 1; j <= 2; ++j)
      lhs += fox_derivative(w, j) * (GroupRingElement(Word::generator(j)) - GroupRingElement::one());
    CHECK(lhs == GroupRingElement(w) - GroupRingElement::one());
  }
}

TEST_CASE("figure-eight relator derivative matches the hand computation in the knot group") {
  // The two expressions differ in the free group (the last two words are
  // rewritten with the relation), so compare their images under Phi at
  // characters of the knot group.
  const KnotPreset p = load_preset("4_1");
  REQUIRE(p.presentation.relators().size() == 1);
  const GroupRingElement d = fox_derivative(p.presentation.relators()[0], 1);
  const GroupRingElement expected = ring({{"g1^-1", -1},
                                          {"g1^-1 g2", 1},
                                          {"g1^-1 g2 g1 g2^-1", 1},
                                          {"g2 g1^-1", 1},
                                          {"g2 g1^-1 g2", -1}});
  CHECK_FALSE(d == expected);
  for (const auto& pt : sample_riley_points(p.components[0].riley, 3, 6)) {
    const Representation rho = two_bridge_representation(pt.y, pt.m);
    const PolyMatrix a = phi(d, rho, p.presentation), b = phi(expected, rho, p.presentation);
    for (const Complex t0 : {Complex(0.8, 0.3), Complex(-1.1, 0.9)}) {
      const ComplexMatrix ea = a.evaluate_at(t0), eb = b.evaluate_at(t0);
      CHECK(max_abs(ea - eb) < Real(1e-10) * (Real(1) + max_abs(ea)));
    }
  }
  // A non-relator word gives a different image.
  const GroupRingElement other = fox_derivative(parse_word("g1 g2 g1^-1 g2^-1"), 1);
  const auto pt = sample_riley_points(p.components[0].riley, 1, 6)[0];
  const Representation rho = two_bridge_representation(pt.y, pt.m);
  CHECK(max_abs(phi(other, rho, p.presentation).evaluate_at(Complex(0.8, 0.3)) -
                phi(expected, rho, p.presentation).evaluate_at(Complex(0.8, 0.3))) > Real(1e-3));
}

TEST_CASE("presentation checks") {
  CHECK_THROWS(Presentation(2, {}, {1, 1}));
  CHECK_THROWS(Presentation(2, {parse_word("g1 g3")}, {1, 1}));
  const Presentation p(2, {parse_word("g1 g2 g1^-1 g2^-1")}, {1, 1});
  CHECK(abelianization_weight(parse_word("g1 g2 g2"), p) == 3);
  CHECK(abelianization_weight(p.relators()[0], p) == 0);
}
