#include "adjtor/adjointrep/adjoint.hpp"

#include <algorithm>

namespace adjtor {

Real Mat2::max_abs() const {
  Real m = abs(a);
  for (const Complex* z : {&b, &c, &d}) {
    Real v = abs(*z);
    if (v > m) m = v;
  }
  return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

void require_sl2(const Mat2& m) {
  Real scale = m.max_abs();
  scale = scale > 1 ? Real(scale * scale) : Real(1);
  if (abs(m.det() - Complex(1)) > Real(1e-12) * scale) throw DomainError("matrix is not in SL2");
}

ComplexMatrix adjoint(const Mat2& g) {
  require_sl2(g);
  const Mat2 gi = g.sl2_inverse();
  const Mat2 basis[3] = {
      {Complex(1), Complex(0), Complex(0), Complex(-1)},
      {Complex(0), Complex(1), Complex(0), Complex(0)},
      {Complex(0), Complex(0), Complex(1), Complex(0)},
  };
  ComplexMatrix out(3, 3, Complex(0));
  for (std::size_t k = 0; k < 3; ++k) {
    const Mat2 x = g * basis[k] * gi;
    // Traceless x = x.a h + x.b e + x.c f.
    out(0, k) = x.a;
    out(1, k) = x.b;
    out(2, k) = x.c;
  }
  return out;
}

Representation::Representation(std::vector<Mat2> images) : images_(std::move(images)) {
  for (const auto& m : images_) require_sl2(m);
}

Mat2 Representation::evaluate(const Word& w) const {
  Mat2 out = Mat2::identity();
  for (const auto& l : w.letters()) {
    if (l.generator > static_cast<int>(images_.size())) throw StructuralError("word uses a generator without an image");
    const Mat2& g = images_[static_cast<std::size_t>(l.generator - 1)];
    out = out * (l.exponent > 0 ? g : g.sl2_inverse());
  }
  return out;
}

Representation Representation::conjugated(const Mat2& p) const {
  require_sl2(p);
  std::vector<Mat2> out;
  for (const auto& g : images_) out.push_back(p * g * p.sl2_inverse());
  return Representation(out);
}

Representation two_bridge_representation(const Complex& y, const Complex& m) {
  if (m.is_zero()) throw DomainError("meridian eigenvalue must be nonzero");
  const Complex mi = Complex(1) / m;
  return Representation({{m, Complex(1), Complex(0), mi}, {m, Complex(0), y, mi}});
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const std::string& var)
    : rows_(rows), cols_(cols), var_(var), entries_(rows * cols, NumericPoly(Variables{var})) {}

ComplexMatrix PolyMatrix::evaluate_at(const Complex& t0) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = evaluate((*this)(r, c), {t0});
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_ || a.var_ != b.var_) throw StructuralError("polynomial matrix product: shape mismatch");
  PolyMatrix out(a.rows_, b.cols_, a.var_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.var_ != b.var_)
    throw StructuralError("polynomial matrix sum: shape mismatch");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

PolyMatrix phi(const GroupRingElement& e, const Representation& rho, const Presentation& pres) {
  PolyMatrix out(3, 3, "t");
  for (const auto& [w, n] : e.terms()) {
    const ComplexMatrix ad = adjoint(rho.evaluate(w));
    const int power = abelianization_weight(w, pres);
    const Complex coeff(static_cast<long>(n));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) out(r, c).add_term({power}, coeff * ad(r, c));
  }
  return out;
}

NumericPoly determinant(const PolyMatrix& m, const Real& rel_tol) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square polynomial matrix");
  const std::size_t n = m.rows();
  const Variables vars{m.variable()};
  // Shift each row to nonnegative powers; the degree bound is the sum of the
  // row spans.
  PolyMatrix shifted = m;
  int total_shift = 0;
  std::size_t bound = 0;
  for (std::size_t r = 0; r < n; ++r) {
    int lo = 0;
    int hi = 0;
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c).is_zero()) continue;
      const auto [a, b] = degree_range(m(r, c), m.variable());
      lo = any ? std::min(lo, a) : a;
      hi = any ? std::max(hi, b) : b;
      any = true;
    }
    if (!any) return NumericPoly(vars);
    for (std::size_t c = 0; c < n; ++c) shifted(r, c) = shift(m(r, c), m.variable(), -lo);
    total_shift += lo;
    bound += static_cast<std::size_t>(hi - lo);
  }
  const std::size_t npts = bound + 1;
  std::vector<Complex> nodes(npts);
  std::vector<Complex> values(npts);
  for (std::size_t k = 0; k < npts; ++k) {
    nodes[k] = polar(Real(1), 2 * pi() * Real(static_cast<long>(k)) / Real(static_cast<long>(npts)));
    values[k] = adjtor::determinant(shifted.evaluate_at(nodes[k]));
  }
  std::vector<Complex> coeffs(npts);
  Real biggest = 0;
  for (std::size_t j = 0; j < npts; ++j) {
    Complex sum(0);
    for (std::size_t k = 0; k < npts; ++k) sum += values[k] * conj(nodes[(k * j) % npts]);
    coeffs[j] = sum / Complex(Real(static_cast<long>(npts)));
    Real a = abs(coeffs[j]);
    if (a > biggest) biggest = a;
  }
  NumericPoly out(vars);
  for (std::size_t j = 0; j < npts; ++j)
    if (abs(coeffs[j]) > rel_tol * biggest) out.add_term({static_cast<int>(j) + total_shift}, coeffs[j]);
  return out;
}

}  // namespace adjtor
