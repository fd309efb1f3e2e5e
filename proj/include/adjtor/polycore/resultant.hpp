#pragma once

#include "adjtor/polycore/laurent.hpp"

#include <string>
#include <vector>

namespace adjtor {

struct ExactResultant {
  ExactPoly value;  // over the inputs' variables minus var
  int f_shift = 0;  // f was multiplied by var^f_shift before elimination
  int g_shift = 0;
  std::vector<std::string> warnings;
};

/// Sylvester resultant in var by fraction-free (Bareiss) elimination.  Both
/// inputs are first shifted so that their lowest power of var is var^0.
ExactResultant resultant(const ExactPoly& f, const ExactPoly& g, const std::string& var);

/// Determinant of a square matrix of exact polynomials (Bareiss).
ExactPoly bareiss_determinant(std::vector<std::vector<ExactPoly>> a, const Variables& vars);

struct NumericResultant {
  NumericPoly value;  // univariate in the remaining variable
  int f_shift = 0;
  int g_shift = 0;
};

/// Resultant in var of two bivariate numeric polynomials, by evaluating the
/// Sylvester determinant at roots of unity in the other variable and
/// interpolating.  Coefficients below trim_tol * max|coefficient| are dropped.
NumericResultant numeric_resultant(const NumericPoly& f, const NumericPoly& g, const std::string& var,
                                   const Real& trim_tol);

}  // namespace adjtor
