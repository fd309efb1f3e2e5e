#include "adjtor/residue/torus_solve.hpp"

#include "adjtor/polycore/resultant.hpp"
#include "adjtor/polycore/roots.hpp"

#include <algorithm>

namespace adjtor {

namespace {

Real relative_residual(const NumericPoly& f1, const NumericPoly& f2, const TorusPoint& z) {
  const std::vector<Complex> at{z[0], z[1]};
  const Real s1 = std::max(Real(1e-300), evaluation_scale(f1, at));
  const Real s2 = std::max(Real(1e-300), evaluation_scale(f2, at));
  return std::max(abs(evaluate(f1, at)) / s1, abs(evaluate(f2, at)) / s2);
}

bool less_point(const TorusPoint& a, const TorusPoint& b) {
  for (int k = 0; k < 2; ++k) {
    const Real tol = Real(1e-9) * (1 + abs(a[k]) + abs(b[k]));
    if (abs(a[k].real() - b[k].real()) > tol) return a[k].real() < b[k].real();
    if (abs(a[k].imag() - b[k].imag()) > tol) return a[k].imag() < b[k].imag();
  }
  return false;
}

}  // namespace

Complex jacobian(const NumericPoly& f1, const NumericPoly& f2, const TorusPoint& z) {
  const auto& v = f1.variables();
  const std::vector<Complex> at{z[0], z[1]};
  return evaluate(derivative(f1, v[0]), at) * evaluate(derivative(f2, v[1]), at) -
         evaluate(derivative(f1, v[1]), at) * evaluate(derivative(f2, v[0]), at);
}

TorusSolution solve_torus_system(const NumericPoly& f1, const NumericPoly& f2) {
  f1.check_compatible(f2);
  if (f1.nvars() != 2) throw StructuralError("solve_torus_system: only two variables are supported");
  const std::string& v0 = f1.variables()[0];
  const std::string& v1 = f1.variables()[1];
  const NumericPoly d1[2] = {derivative(f1, v0), derivative(f1, v1)};
  const NumericPoly d2[2] = {derivative(f2, v0), derivative(f2, v1)};

  TorusSolution out;
  const NumericResultant res = numeric_resultant(f1, f2, v1, scaled_tolerance(1e-14));
  if (res.value.is_zero()) throw NonGenericError("solve_torus_system: the resultant vanishes (common factor)");
  if (res.value.size() == 1) return out;  // a monomial resultant has no torus roots
  const RootResult first = univariate_roots(res.value);

  // Lift through whichever input actually depends on the second variable.
  const auto [lo1, hi1] = degree_range(f1, v1);
  const NumericPoly& lifter = (hi1 > lo1) ? f1 : f2;

  const Real accept_tol = scaled_tolerance(1e-10);
  const Real correction_tol = scaled_tolerance(1e-9);
  const unsigned bits = working_bits();
  const Real step_tol = Real(1e-14) * boost::multiprecision::pow(Real(2), 53 - static_cast<int>(bits));

  for (const auto& c0 : first.clusters) {
    const NumericPoly in_v1 = substitute(lifter, v0, c0.center);
    if (in_v1.size() < 2) continue;
    for (const auto& c1 : univariate_roots(in_v1).clusters) {
      TorusPoint z{c0.center, c1.center};
      Real rel = relative_residual(f1, f2, z);
      Real correction = -1;
      bool converged = false;
      for (int iter = 0; iter < 100; ++iter) {
        const std::vector<Complex> at{z[0], z[1]};
        const Complex a11 = evaluate(d1[0], at), a12 = evaluate(d1[1], at);
        const Complex a21 = evaluate(d2[0], at), a22 = evaluate(d2[1], at);
        const Complex det = a11 * a22 - a12 * a21;
        if (det.is_zero()) break;
        const Complex r1 = evaluate(f1, at), r2 = evaluate(f2, at);
        const Complex s0 = (a22 * r1 - a12 * r2) / det;
        const Complex s1 = (a11 * r2 - a21 * r1) / det;
        correction = (abs(s0) + abs(s1)) / (1 + abs(z[0]) + abs(z[1]));
        Real lambda = 1;
        bool improved = false;
        TorusPoint next;
        Real next_rel;
        for (int half = 0; half < 30 && !improved; ++half) {
          next = {z[0] - Complex(lambda) * s0, z[1] - Complex(lambda) * s1};
          next_rel = relative_residual(f1, f2, next);
          improved = next_rel < rel;
          lambda /= 2;
        }
        if (!improved) break;
        const Real step = abs(next[0] - z[0]) + abs(next[1] - z[1]);
        z = next;
        rel = next_rel;
        if (step < step_tol * (1 + abs(z[0]) + abs(z[1]))) {
          converged = true;
          break;
        }
      }
      if (rel > accept_tol || correction < 0 || correction > correction_tol) {
        if (converged) ++out.rejected;
        continue;
      }
      if (abs(z[0]) <= Real(1e-12) || abs(z[1]) <= Real(1e-12)) continue;
      bool duplicate = false;
      for (const auto& w : out.zeros)
        if (abs(w[0] - z[0]) + abs(w[1] - z[1]) <= Real(1e-8) * (1 + abs(z[0]) + abs(z[1]))) duplicate = true;
      if (duplicate) continue;
      out.worst_residual = std::max(out.worst_residual, rel.convert_to<double>());
      out.zeros.push_back(z);
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end(), less_point);
  return out;
}

}  // namespace adjtor
