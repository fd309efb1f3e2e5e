#include "adjtor/polycore/rational.hpp"

namespace adjtor {

namespace {

const std::string& single_variable(const NumericPoly& p) {
  if (p.nvars() != 1) throw StructuralError("expected a univariate polynomial");
  return p.variables()[0];
}

// Synthetic division by (t - r) of a polynomial with nonnegative powers.
// Returns quotient coefficients and the remainder.
std::pair<std::vector<Complex>, Complex> deflate(const std::vector<Complex>& c, const Complex& r) {
  std::vector<Complex> q(c.size() - 1, Complex(0));
  Complex acc(0);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * r + c[k];
    if (k > 0) q[k - 1] = acc;
  }
  return {q, acc};
}

}  // namespace

std::pair<NumericPoly, NumericPoly> divmod(const NumericPoly& a, const NumericPoly& b) {
  const std::string& var = single_variable(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  a.check_compatible(b);
  NumericPoly q(a.variables());
  NumericPoly r = a;
  const auto [blo, bhi] = degree_range(b, var);
  if (blo < 0) throw DomainError("divmod: divisor has negative powers");
  const Complex lead = b.coefficient({bhi});
  while (!r.is_zero()) {
    const auto [rlo, rhi] = degree_range(r, var);
    if (rlo < 0) throw DomainError("divmod: dividend has negative powers");
    if (rhi < bhi) break;
    const Complex c = r.coefficient({rhi}) / lead;
    q.add_term({rhi - bhi}, c);
    NumericPoly t = shift(b, var, rhi - bhi);
    t *= c;
    r -= t;
    // Drop the cancelled leading term exactly; rounding can leave residue.
    NumericPoly cleaned(r.variables());
    for (const auto& [e, v] : r.terms())
      if (e[0] != rhi) cleaned.add_term(e, v);
    r = std::move(cleaned);
  }
  return {q, r};
}

RationalFunction::RationalFunction(NumericPoly numerator, NumericPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  const std::string var = single_variable(den_);
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.variables() != den_.variables()) throw StructuralError("rational function: variable mismatch");
  if (num_.is_zero()) {
    den_ = NumericPoly::constant(den_.variables(), Complex(1));
    return;
  }
  const int common = std::min(degree_range(num_, var).first, degree_range(den_, var).first);
  if (common != 0) {
    num_ = shift(num_, var, -common);
    den_ = shift(den_, var, -common);
  }
}

std::pair<Complex, Complex> RationalFunction::value_and_derivative(const Complex& t0) const {
  const std::string& var = variable();
  const Complex d = evaluate(den_, {t0});
  const Real scale = evaluation_scale(den_, {t0});
  if (d.is_zero() || abs(d) <= scaled_tolerance(1e-15) * scale) throw PoleError("rational function has a pole at t0");
  const Complex n = evaluate(num_, {t0});
  const Complex dn = evaluate(derivative(num_, var), {t0});
  const Complex dd = evaluate(derivative(den_, var), {t0});
  return {n / d, (dn * d - n * dd) / (d * d)};
}

int RationalFunction::cancel_common_root(const Complex& root, const Real& tol) {
  const std::string var = variable();  // copy: num_ is reassigned below
  int removed = 0;
  while (!num_.is_zero()) {
    auto [nlo, ndense] = dense_coefficients(num_);
    auto [dlo, ddense] = dense_coefficients(den_);
    if (ndense.size() < 2 || ddense.size() < 2) break;
    const auto [nq, nr] = deflate(ndense, root);
    const auto [dq, dr] = deflate(ddense, root);
    const Real nscale = evaluation_scale(num_, {root});
    const Real dscale = evaluation_scale(den_, {root});
    if (abs(nr) > tol * nscale || abs(dr) > tol * dscale) break;
    num_ = from_dense(var, nq, nlo);
    den_ = from_dense(var, dq, dlo);
    ++removed;
  }
  return removed;
}

RationalFunction RationalFunction::scaled(int sign, int shift_by) const {
  NumericPoly n = shift(num_, variable(), shift_by);
  if (sign < 0) n = -n;
  return RationalFunction(n, den_);
}

int RationalFunction::valuation() const {
  if (num_.is_zero()) return 0;
  return degree_range(num_, variable()).first - degree_range(den_, variable()).first;
}

NormalizedRational normalize(const RationalFunction& r) {
  const int shift_by = -r.valuation();
  int sign = 1;
  if (!r.numerator().is_zero()) {
    const Complex lowest = r.numerator().terms().begin()->second;
    const Real a = arg(lowest);
    if (a < 0 || a >= pi()) sign = -1;
  }
  return {r.scaled(sign, shift_by), sign, shift_by};
}

}  // namespace adjtor
