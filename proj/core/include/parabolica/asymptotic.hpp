#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/geometry.hpp"
#include "parabolica/line_field.hpp"

namespace parabolica {

/// f_xx dx^2 + 2 f_xy dx dy + f_yy dy^2 at p.
QuadraticForm second_fundamental_form(const DenseEvaluator& f, Point2 p);

/// Null directions of the second fundamental form at p: two at hyperbolic
/// points, one (double) at parabolic points, none at elliptic points.
/// Throws kFlatPoint when f_xx, f_xy, f_yy all vanish.
std::vector<DirectionP1> asymptotic_directions(const BivariatePoly& f, Point2 p);

enum class StopReason { kMaxLength, kDomainBoundary, kFlatPoint, kBox };
std::string_view to_string(StopReason r);

struct AsymptoticCurve {
  std::vector<Point2> points;
  /// Direction used at each point.
  std::vector<DirectionP1> directions;
  StopReason stop = StopReason::kMaxLength;
};

/// Integral curve of the asymptotic line field through a hyperbolic p0,
/// starting along the direction with the given label (1 or 2) and continued
/// by choosing, at every step, the direction closest to the previous one.
/// Fixed-step midpoint scheme.
AsymptoticCurve integrate_asymptotic_curve(const BivariatePoly& f, Point2 p0, int branch,
                                           double step, double max_length,
                                           const std::optional<Box>& box = std::nullopt,
                                           bool reverse = false);

/// G1 = grad(Hess f) . (-f_xy, f_xx) and G2 = grad(Hess f) . (f_yy, -f_xy).
/// Throws kDegreeTooLow for deg f < 3.
std::pair<BivariatePoly, BivariatePoly> tangency_polynomial(const BivariatePoly& f);

enum class Tangency { kInterior, kExterior };
std::string_view to_string(Tangency t);

struct Godron {
  Point2 location;
  DirectionP1 direction;
  Tangency tangency = Tangency::kInterior;
  /// d^2/dt^2 Hess f(p + t v) at t = 0, v the unit double direction.
  /// Negative means the straight tangent line enters the hyperbolic side.
  double second_derivative = 0.0;
  /// 25 k^2 - 8 a e with a = II(n,n), k = D^3f(v,v,n), e = D^4f(v,v,v,v),
  /// n the unit normal. Integral curves through p are s = c t^2 with
  /// 4a c^2 + 5k c + e/2 = 0; they exist (interior) iff this is positive.
  double contact_discriminant = 0.0;
  /// Hessian curve singular at p, contact_discriminant below tolerance, or
  /// a e = 3 k^2 (multiple root of the tangency system).
  bool degenerate = false;
};

struct GodronSearch {
  std::vector<Godron> godrons;
  std::vector<std::string> warnings;
  /// One "degenerate godron (non-generic)" entry per degenerate point.
  std::vector<std::string> errors;

  int interior() const;
  int exterior() const;
};

/// Parabolic points where the double asymptotic direction is tangent to the
/// Hessian curve. Empty when Hess f is a nonzero constant. Throws kDegenerate
/// when Hess f vanishes identically or neither tangency system can be solved.
GodronSearch find_godrons(const BivariatePoly& f, const std::optional<Box>& box = std::nullopt);

}  // namespace parabolica
