#pragma once

#include <random>

#include "parabolica/bivariate.hpp"

namespace parabolica::testing {

/// Dense random polynomial of exact total degree `degree`, integer
/// coefficients in [-range, range].
inline BivariatePoly random_poly(std::mt19937_64& rng, int degree, int range = 5, int min_degree = 0) {
  std::uniform_int_distribution<int> coeff(-range, range);
  BivariatePoly p;
  for (int d = min_degree; d <= degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      const int c = coeff(rng);
      if (c != 0) p.add_term(Rational(c), i, d - i);
    }
  }
  if (p.homogeneous_part(degree).is_zero()) p.add_term(Rational(1), degree, 0);
  return p;
}

inline BivariatePoly random_homogeneous(std::mt19937_64& rng, int degree, int range = 5) {
  return random_poly(rng, degree, range, degree);
}

}  // namespace parabolica::testing
