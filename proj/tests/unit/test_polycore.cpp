#include "adjtor/polycore/parse.hpp"
#include "adjtor/polycore/rational.hpp"
#include "adjtor/polycore/resultant.hpp"

#include <doctest.h>

using namespace adjtor;

namespace {

const Variables ym{"y", "m"};

ExactPoly P(const std::string& s, const Variables& v = ym) { return parse_polynomial(s, v); }

}  // namespace

TEST_CASE("parsing expands products, powers and negative exponents") {
  const ExactPoly f = P("(y-1)*(m^2+m^-2) + y^2 - 3*y + 3");
  CHECK(f.size() == 7);
  CHECK(f.coefficient({1, 2}) == 1);
  CHECK(f.coefficient({0, -2}) == -1);
  CHECK(f.coefficient({2, 0}) == 1);
  CHECK(f.constant_term() == 3);
  CHECK(P("2 y m") == P("2*y*m"));
  CHECK(P("(y+1)^3") == P("y^3 + 3*y^2 + 3*y + 1"));
  CHECK(P("0.25*y").coefficient({1, 0}) == Rational(1, 4));
  CHECK(P("010").constant_term() == 10);
  CHECK(P("0").is_zero());
  CHECK(P("1.05").constant_term() == Rational(21, 20));
  CHECK(P("(m^2)^-1") == P("m^-2"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("z + 1"), Error);
  CHECK_THROWS_AS(P("(y+1"), ParseError);
  CHECK_THROWS_AS(P("(y+1)^-1"), Error);
  CHECK_THROWS_AS(P("y ^"), ParseError);
}

TEST_CASE("ring arithmetic") {
  const ExactPoly a = P("y + m^-1");
  const ExactPoly b = P("y - m^-1");
  CHECK(a * b == P("y^2 - m^-2"));
  CHECK(a - a == ExactPoly(ym));
  CHECK(derivative(P("y^3 m^-2"), "m") == P("-2 y^3 m^-3"));
  CHECK(shift(P("y + 1"), "m", 2) == P("y m^2 + m^2"));
  const auto box = exponent_box(P("y^3 m^-2 + m^4"));
  CHECK(box[0] == std::pair{0, 3});
  CHECK(box[1] == std::pair{-2, 4});
}

TEST_CASE("evaluation and substitution") {
  const ExactPoly f = P("y^2 m^-1 + 3 m");
  const Complex v = evaluate(f, {Complex(2), Complex(0.5)});
  CHECK(abs(v - Complex(9.5)) < Real(1e-15));
  const NumericPoly g = substitute(f, "m", Complex(2));
  CHECK(g.variables() == Variables{"y"});
  CHECK(abs(evaluate(g, {Complex(3)}) - Complex(10.5)) < Real(1e-15));
}

TEST_CASE("resultant of simple pairs") {
  // Res_y(y^2 - m, y - m) = m^2 - m.
  const ExactResultant r = resultant(P("y^2 - m"), P("y - m"), "y");
  CHECK(r.value.variables() == Variables{"m"});
  const ExactPoly expect = parse_polynomial("m^2 - m", {"m"});
  CHECK((r.value == expect || r.value == -expect));
  // A common factor makes the resultant vanish.
  CHECK(resultant(P("(y-m)*(y+1)"), P("(y-m)*(y+2)"), "y").value.is_zero());
}

TEST_CASE("figure-eight A-polynomial from the resultant") {
  // Res_y(f, l - L(y, m)) contains the printed A-polynomial as a factor.
  const Variables yml{"y", "m", "l"};
  const ExactPoly f = parse_polynomial("(y-1)*(m^2+m^-2) + y^2 - 3*y + 3", yml);
  const ExactPoly g = parse_polynomial("l + m^-2*(y-3)*(y-1)^2 + m^-4*(y^2-3*y+1)", yml);
  const ExactPoly res = resultant(f, g, "y").value;
  const ExactPoly a = parse_polynomial("l + l^-1 + (-m^-4 + m^-2 + 2 + m^2 - m^4)", {"m", "l"});
  const auto q = exact_divide(res, a);
  REQUIRE(q.has_value());
  CHECK(q->size() >= 1);
}

TEST_CASE("exact division and reduction") {
  const ExactPoly a = P("y^2 - m^2");
  CHECK(exact_divide(a, P("y - m")) == P("y + m"));
  CHECK_FALSE(exact_divide(a, P("y - 2*m")).has_value());
  CHECK(exact_divide(P("y^3 m^-1"), P("y m")) == P("y^2 m^-2"));
  // y^3 mod (y^2 - m) = m y.
  CHECK(reduce_modulo(P("y^3"), P("y^2 - m"), "y") == P("m y"));
}

TEST_CASE("rational functions cancel common roots") {
  const Variables t{"t"};
  const NumericPoly num = to_numeric(parse_polynomial("(t-1)^2*(t+3)", t));
  const NumericPoly den = to_numeric(parse_polynomial("(t-1)*(t-2)", t));
  RationalFunction r(num, den);
  CHECK(r.cancel_common_root(Complex(1), Real(1e-12)) == 1);
  // r = (t-1)(t+3)/(t-2): value 0 and derivative 4/(-1) at t = 1.
  const auto [v, d] = r.value_and_derivative(Complex(1));
  CHECK(abs(v) < Real(1e-14));
  CHECK(abs(d - Complex(-4)) < Real(1e-13));
  CHECK_THROWS_AS(r(Complex(2)), PoleError);
}

TEST_CASE("normalization is invariant under +-t^n") {
  const Variables t{"t"};
  const RationalFunction r(to_numeric(parse_polynomial("2 t^3 - t^2 + 5 t", t)),
                           to_numeric(parse_polynomial("t^2 + 1", t)));
  const NormalizedRational a = normalize(r);
  const NormalizedRational b = normalize(r.scaled(-1, 4));
  for (const Complex& t0 : {Complex(0.7, 0.2), Complex(-1.3, 0.5)})
    CHECK(relative_distance(a.value(t0), b.value(t0)) < Real(1e-14));
}
