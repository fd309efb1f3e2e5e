#include "adjtor/numeric/matrix.hpp"

#include <utility>

namespace adjtor {

Complex determinant(ComplexMatrix a) {
  if (a.rows() != a.cols()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Complex det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    Real best = abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      Real v = abs(a(r, k));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) return Complex(0);
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      Complex f = a(r, k) / a(k, k);
      if (f.is_zero()) continue;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

Real max_abs(const ComplexMatrix& a) {
  Real m = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Real v = abs(a(r, c));
      if (v > m) m = v;
    }
  return m;
}

std::vector<std::size_t> independent_columns(const ComplexMatrix& input, const Real& relative_tol) {
  ComplexMatrix a = input;
  const Real threshold = relative_tol * max_abs(a);
  std::vector<std::size_t> chosen;
  std::vector<bool> used_row(a.rows(), false);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t piv = a.rows();
    Real best = threshold;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (used_row[r]) continue;
      Real v = abs(a(r, c));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv == a.rows()) continue;
    chosen.push_back(c);
    used_row[piv] = true;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == piv) continue;
      Complex f = a(r, c) / a(piv, c);
      if (f.is_zero()) continue;
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(piv, k);
    }
  }
  return chosen;
}

std::size_t numerical_rank(ComplexMatrix a, const Real& relative_tol) {
  return independent_columns(a, relative_tol).size();
}

ComplexVector solve(ComplexMatrix a, ComplexVector b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw StructuralError("solve: shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    Real best = abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      Real v = abs(a(r, k));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) throw DomainError("solve: singular matrix");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      Complex f = a(r, k) / a(k, k);
      if (f.is_zero()) continue;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  ComplexVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Complex s = b[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= a(k, c) * x[c];
    x[k] = s / a(k, k);
  }
  return x;
}

ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.size()) throw StructuralError("matrix-vector product: shape mismatch");
  ComplexVector y(a.rows(), Complex(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
  return y;
}

}  // namespace adjtor
