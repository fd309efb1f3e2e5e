#include "adjtor/torsion/slope.hpp"

namespace adjtor {

namespace {

Real max_of(std::initializer_list<Real> xs) {
  Real m = 0;
  for (const auto& x : xs)
    if (x > m) m = x;
  return m;
}

struct Partials {
  Complex f_y, f_m, L_y, L_m;
};

Partials riley_partials(const ExactPoly& riley, const ExactPoly& longitude, const SlopePoint& pt) {
  const std::vector<Complex> at{pt.y, pt.m};
  return {evaluate(derivative(riley, "y"), at), evaluate(derivative(riley, "m"), at),
          evaluate(derivative(longitude, "y"), at), evaluate(derivative(longitude, "m"), at)};
}

}  // namespace

Complex slope_factor_apoly(const ExactPoly& apoly, int p, int q, const SlopePoint& pt) {
  const std::vector<Complex> at{pt.m, pt.l};
  const Complex a_m = evaluate(derivative(apoly, "m"), at);
  const Complex a_l = evaluate(derivative(apoly, "l"), at);
  const Real scale = max_of({abs(a_m), abs(a_l)});
  if (abs(a_m) <= Real(1e-10) * scale || scale == 0)
    throw NonGenericError("dA/dm vanishes at the point (non-regular character)");
  const Complex dm_dl = -a_l / a_m;
  return Complex(static_cast<long>(p)) * (pt.l / pt.m) * dm_dl + Complex(static_cast<long>(q));
}

Complex bordered_jacobian(const ExactPoly& riley, const ExactPoly& longitude, int p, int q, const SlopePoint& pt) {
  const Partials d = riley_partials(riley, longitude, pt);
  // Rows f, g = l - L, h = m^p l^q - x; columns y, m, l.
  const Complex h_m = Complex(static_cast<long>(p)) * pt.x / pt.m;
  const Complex h_l = Complex(static_cast<long>(q)) * pt.x / pt.l;
  ComplexMatrix j(3, 3, Complex(0));
  j(0, 0) = d.f_y;
  j(0, 1) = d.f_m;
  j(1, 0) = -d.L_y;
  j(1, 1) = -d.L_m;
  j(1, 2) = Complex(1);
  j(2, 1) = h_m;
  j(2, 2) = h_l;
  return determinant(j);
}

Complex slope_factor_bordered(const ExactPoly& riley, const ExactPoly& longitude, int p, int q,
                              const SlopePoint& pt) {
  const Partials d = riley_partials(riley, longitude, pt);
  const Complex j2 = -d.f_y * d.L_m + d.f_m * d.L_y;
  // Rows of very different size (large longitude coefficients) are scaled separately.
  const Real rows = max_of({abs(d.f_y), abs(d.f_m)}) * max_of({abs(d.L_y), abs(d.L_m)});
  if (rows == 0 || abs(j2) <= Real(1e-10) * rows)
    throw NonGenericError("the (y, m)-Jacobian of (f, g) vanishes at the point");
  return (pt.l / pt.x) * bordered_jacobian(riley, longitude, p, q, pt) / j2;
}

TorsionValue slope_change(const TorsionValue& tor_lambda, const Complex& factor) {
  TorsionValue out = tor_lambda;
  out.value = factor * tor_lambda.value;
  return out;
}

}  // namespace adjtor
