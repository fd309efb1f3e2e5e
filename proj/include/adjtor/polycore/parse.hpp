#pragma once

#include "adjtor/polycore/laurent.hpp"

#include <string>

namespace adjtor {

/// Parses a plain-text Laurent polynomial such as
/// `(y-1)*(m^2+m^-2) + y^2 - 3*y + 3` over the given variables.  Supports
/// + - * ^ (integer exponents, negative allowed), parentheses, integer and
/// decimal literals (decimals become exact rationals), and implicit
/// multiplication between adjacent factors.  A parenthesised expression may
/// only be raised to a non-negative power unless it is a single monomial.
ExactPoly parse_polynomial(const std::string& text, const Variables& vars);

}  // namespace adjtor
