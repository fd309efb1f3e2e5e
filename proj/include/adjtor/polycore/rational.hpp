#pragma once

#include "adjtor/polycore/laurent.hpp"

#include <utility>

namespace adjtor {

/// Quotient and remainder of univariate polynomials (nonnegative powers).
std::pair<NumericPoly, NumericPoly> divmod(const NumericPoly& a, const NumericPoly& b);

/// Element of C(t) stored as numerator / denominator, both univariate numeric
/// Laurent polynomials in the same variable.  Common powers of t are cancelled
/// on construction.
class RationalFunction {
 public:
  RationalFunction(NumericPoly numerator, NumericPoly denominator);

  const NumericPoly& numerator() const { return num_; }
  const NumericPoly& denominator() const { return den_; }
  const std::string& variable() const { return num_.variables()[0]; }

  Complex operator()(const Complex& t0) const { return value_and_derivative(t0).first; }

  /// (r(t0), r'(t0)) by the quotient rule.  Throws PoleError where the
  /// denominator vanishes.
  std::pair<Complex, Complex> value_and_derivative(const Complex& t0) const;

  /// Divides numerator and denominator by (t - root) while both vanish there
  /// (relative tolerance tol).  Returns the number of factors removed.
  int cancel_common_root(const Complex& root, const Real& tol);

  /// Multiplication by +-t^n.
  RationalFunction scaled(int sign, int shift) const;

  /// Net t-valuation: lowest power of the numerator minus that of the
  /// denominator.
  int valuation() const;

 private:
  NumericPoly num_;
  NumericPoly den_;
};

struct NormalizedRational {
  RationalFunction value;
  int sign;   // applied factor +-1
  int shift;  // applied factor t^shift
};

/// Canonical representative of r up to +-t^n: net valuation zero and the
/// lowest nonzero numerator coefficient with argument in [0, pi).
NormalizedRational normalize(const RationalFunction& r);

}  // namespace adjtor
