#pragma once

#include "adjtor/foxcalc/group_ring.hpp"
#include "adjtor/foxcalc/presentation.hpp"
#include "adjtor/numeric/matrix.hpp"
#include "adjtor/polycore/laurent.hpp"

#include <string>
#include <vector>

namespace adjtor {

struct Mat2 {
  Complex a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {Complex(1), Complex(0), Complex(0), Complex(1)}; }
  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  Real max_abs() const;
  /// Inverse assuming det = 1.
  Mat2 sl2_inverse() const { return {d, -b, -c, a}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
};

/// Throws DomainError unless |det - 1| <= 1e-12 * max(1, max|entry|^2).
void require_sl2(const Mat2& m);

/// Matrix of v -> a v a^-1 on sl2 in the basis h = diag(1,-1), e = E12,
/// f = E21.  Requires a in SL2.
ComplexMatrix adjoint(const Mat2& a);

/// Images of the generators of a presentation.
class Representation {
 public:
  explicit Representation(std::vector<Mat2> images);

  const std::vector<Mat2>& images() const { return images_; }
  Mat2 evaluate(const Word& w) const;
  /// P rho P^-1 for P in SL2.
  Representation conjugated(const Mat2& p) const;

 private:
  std::vector<Mat2> images_;
};

/// g1 -> [[m, 1], [0, 1/m]], g2 -> [[m, 0], [y, 1/m]].
Representation two_bridge_representation(const Complex& y, const Complex& m);

/// Matrix with Laurent polynomial entries in one variable (t).
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const std::string& var = "t");

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::string& variable() const { return var_; }
  NumericPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const NumericPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ComplexMatrix evaluate_at(const Complex& t0) const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::string var_;
  std::vector<NumericPoly> entries_;
};

/// Phi(sum n_i w_i) = sum n_i t^alpha(w_i) Ad(rho(w_i)).
PolyMatrix phi(const GroupRingElement& e, const Representation& rho, const Presentation& pres);

/// Determinant of a square polynomial matrix by evaluation at roots of unity
/// and interpolation.  Coefficients below rel_tol * max|coefficient| are
/// dropped.
NumericPoly determinant(const PolyMatrix& m, const Real& rel_tol);

}  // namespace adjtor
