#include "adjtor/numeric/complex.hpp"
#include "adjtor/numeric/errors.hpp"
#include "adjtor/numeric/matrix.hpp"

#include <doctest.h>

using namespace adjtor;

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5+0.5i") == Complex(1.5, 0.5));
  CHECK(parse_complex("2-3i") == Complex(2, -3));
  CHECK(parse_complex("-4") == Complex(-4, 0));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(relative_distance(parse_complex("1e-3+2e+1i"), Complex(Real("0.001"), Real(20))) == 0);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  CHECK(format_complex(Complex(1.25, -2), 6) == "1.25-2i");
}

TEST_CASE("precision scopes nest and restore") {
  CHECK(working_bits() == 53);
  {
    PrecisionScope outer(128);
    CHECK(working_bits() == 128);
    {
      PrecisionScope inner(256);
      CHECK(working_bits() == 256);
      // 1/3 carries more digits than a double at 256 bits.
      const Real third = Real(1) / 3;
      CHECK(abs(Complex(third) - Complex(1.0 / 3.0)) > Real(1e-20));
    }
    CHECK(working_bits() == 128);
  }
  CHECK(working_bits() == 53);
  CHECK(scaled_tolerance(1e-10) == Real(1e-10));
}

TEST_CASE("with_precision rounds a high-precision copy") {
  Complex hi;
  {
    PrecisionScope s(256);
    hi = Complex(Real(1) / 3, Real(2) / 7);
  }
  const Complex lo = with_precision(hi, 53);
  CHECK(lo.real().precision() <= 17);
  CHECK(abs(lo - Complex(1.0 / 3.0, 2.0 / 7.0)) < Real(1e-16));
}

TEST_CASE("elementary functions") {
  const Complex z(0.3, -1.1);
  CHECK(abs(exp(log(z)) - z) < Real(1e-15));
  CHECK(abs(sqrt(z) * sqrt(z) - z) < Real(1e-15));
  CHECK(abs(pow(z, -3) * pow(z, 3) - Complex(1)) < Real(1e-15));
  CHECK(relative_distance(Complex(1e6), Complex(1e6 + 1)).convert_to<double>() == doctest::Approx(1e-6));
}

TEST_CASE("dense linear algebra") {
  ComplexMatrix a(3, 3);
  const double v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(v[i][j]);
  CHECK(abs(determinant(a) - Complex(18)) < Real(1e-14));
  const ComplexVector b{Complex(1), Complex(2), Complex(3)};
  const ComplexVector x = solve(a, b);
  const ComplexVector back = multiply(a, x);
  for (int k = 0; k < 3; ++k) CHECK(abs(back[k] - b[k]) < Real(1e-14));
  ComplexMatrix singular = a;
  for (int j = 0; j < 3; ++j) singular(2, j) = singular(0, j) + singular(1, j);
  CHECK(numerical_rank(singular, Real(1e-12)) == 2);
  CHECK(independent_columns(singular, Real(1e-12)).size() == 2);
}
