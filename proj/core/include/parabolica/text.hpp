#pragma once

#include <string>
#include <string_view>

#include "parabolica/bivariate.hpp"

namespace parabolica {

/// Parses text in the grammar
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*      divisor must be constant
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' digits)?
///   atom   := number | 'x' | 'y' | '(' expr ')'
/// where number is digits with an optional decimal fraction. Juxtaposition
/// ("2x") is rejected. Throws ParseError with the 1-based position.
BivariatePoly parse_polynomial(std::string_view text);

/// Terms by descending total degree, then descending power of x, e.g.
/// "x^2*y + y^3 - 3/4*x + 1". Parses back to the same polynomial.
std::string to_canonical_string(const BivariatePoly& p);

/// "p/q" for half-integers, else %.12g.
std::string format_half(double v);

}  // namespace parabolica
