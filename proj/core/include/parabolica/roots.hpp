#pragma once

#include <optional>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/rational.hpp"
#include "parabolica/univariate.hpp"

namespace parabolica {

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// One distinct real root: an isolating interval with exact endpoints that
/// contains exactly one root, its refined midpoint, and its multiplicity.
struct RootEntry {
  Rational lo;
  Rational hi;
  double value = 0.0;
  int multiplicity = 1;
  /// Set when the root was certified to be this rational number.
  std::optional<Rational> exact;
};

struct RootList {
  std::vector<RootEntry> roots;

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  std::vector<double> values() const;
};

/// All distinct real roots of p inside `interval` (default: the Cauchy-bound
/// interval), isolated by Descartes sign-variation counting on the squarefree
/// factors and refined by exact bisection until the interval width is below
/// `precision`. Roots are sorted ascending. Throws kZeroInput for p == 0.
RootList real_roots(const UnivariatePoly& p,
                    const std::optional<RationalInterval>& interval = std::nullopt,
                    const Rational& precision = Rational(1, 1000000000000L));

struct LinearFactorCount {
  int k = 0;
  bool simple = true;
};

/// Number of distinct real linear factors of a homogeneous h, and whether each
/// has multiplicity one. Throws kNotHomogeneous / kZeroInput.
LinearFactorCount distinct_real_linear_factors(const BivariatePoly& h);

/// Real zeros of a homogeneous h on the projective line as unit directions
/// (u, v) with angle in [0, pi), each paired with its multiplicity.
struct ProjectiveZero {
  double u = 1.0;
  double v = 0.0;
  int multiplicity = 1;
  /// Slope v/u when it is an exact rational; unset for the vertical direction.
  std::optional<Rational> exact_slope;
  bool vertical = false;
};
std::vector<ProjectiveZero> projective_zeros(const BivariatePoly& h,
                                             const Rational& precision = Rational(1, 1000000000000L));

}  // namespace parabolica
