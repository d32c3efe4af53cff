#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "parabolica/bivariate.hpp"
#include "parabolica/geometry.hpp"

namespace parabolica {

enum class PointClass { kElliptic, kParabolic, kHyperbolic };

std::string_view to_string(PointClass c);

struct PointClassification {
  PointClass cls = PointClass::kParabolic;
  /// Set when the value was not exactly zero but below tolerance.
  bool numerically_parabolic = false;
  /// Hess f at the point, rounded.
  double value = 0.0;
};

/// Exact sign of Hess f at a rational point.
PointClassification classify_point(const BivariatePoly& f, const Rational& x, const Rational& y);

/// Hess f evaluated exactly at the rational value of each double coordinate.
/// |Hess f| <= tolerance * (sum of |terms|) counts as parabolic.
PointClassification classify_point(const BivariatePoly& f, Point2 p, double tolerance = 1e-9);

/// Class of the point (u, v, 0) at infinity, by the sign of Hess f_n(u, v).
/// Throws kDegreeTooLow for deg f < 3 and kUnlabelable when Hess f_n vanishes
/// identically.
PointClass classify_infinity(const BivariatePoly& f, double u, double v);

enum class HomogeneousKind { kHyperbolic, kElliptic, kNeither };

std::string_view to_string(HomogeneousKind k);

struct HomogeneousClass {
  HomogeneousKind kind = HomogeneousKind::kNeither;
  std::string witness;
};

/// Throws kNotHomogeneous, or kDegreeTooLow below degree 2.
HomogeneousClass homogeneous_class(const BivariatePoly& h);

struct CompactnessVerdict {
  bool hessian_compact = false;
  /// Class of the unbounded complement of the Hessian curve; left empty when
  /// f_n is neither hyperbolic nor elliptic.
  std::optional<PointClass> unbounded_component_class;
  std::string reason;
};

CompactnessVerdict compactness_verdict(const BivariatePoly& f);

}  // namespace parabolica
