#pragma once

#include "parabolica/bivariate.hpp"
#include "parabolica/univariate.hpp"

namespace parabolica {

/// Resultant of p and q with respect to y, a polynomial in x, computed by the
/// subresultant PRS over Z[x]. Defined up to a nonzero rational factor: the
/// inputs are scaled to integer coefficients first.
UnivariatePoly resultant_y(const BivariatePoly& p, const BivariatePoly& q);

/// Resultant with respect to x, a polynomial in y.
UnivariatePoly resultant_x(const BivariatePoly& p, const BivariatePoly& q);

/// Resultant of two univariate polynomials (exact, over Q).
Rational resultant(const UnivariatePoly& p, const UnivariatePoly& q);

}  // namespace parabolica
