#pragma once

#include "adjtor/numeric/complex.hpp"
#include "adjtor/numeric/errors.hpp"

#include <cstddef>
#include <vector>

namespace adjtor {

/// Dense row-major matrix. Small sizes only (boundary blocks, Jacobians).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  /// Columns [first, first + count) as a new matrix.
  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using ComplexVector = std::vector<Complex>;

/// Determinant by partial-pivoting LU.
Complex determinant(ComplexMatrix a);

/// Largest entry modulus.
Real max_abs(const ComplexMatrix& a);

/// Numerical rank: pivots below tol * max_abs(a) count as zero.
std::size_t numerical_rank(ComplexMatrix a, const Real& relative_tol);

/// Solves a x = b for square nonsingular a.
ComplexVector solve(ComplexMatrix a, ComplexVector b);

/// Column indices forming a maximal independent set (greedy pivoting).
std::vector<std::size_t> independent_columns(const ComplexMatrix& a, const Real& relative_tol);

ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& x);

}  // namespace adjtor
