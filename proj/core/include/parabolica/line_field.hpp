#pragma once

#include <functional>
#include <optional>

#include "parabolica/geometry.hpp"

namespace parabolica {

/// Unoriented line direction, angle in [0, pi).
struct DirectionP1 {
  double angle = 0.0;

  static DirectionP1 from_angle(double radians);
  Point2 unit() const { return {std::cos(angle), std::sin(angle)}; }
};

/// min(|a - b|, pi - |a - b|)
double distance(DirectionP1 a, DirectionP1 b);

/// a du^2 + 2 b du dv + c dv^2
struct QuadraticForm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double discriminant() const { return b * b - a * c; }
  double operator()(Point2 d) const { return a * d.x * d.x + 2.0 * b * d.x * d.y + c * d.y * d.y; }
};

/// The null direction of `q` with label 1 or 2. Writing q(cos t, sin t) as
/// m + R cos(2t - phi), label 1 is t = (phi - acos(-m/R)) / 2 and label 2 is
/// t = (phi + acos(-m/R)) / 2; label 1 is the root where the form turns from
/// negative to positive as t increases. Empty when q has no real null
/// direction or vanishes identically. The angle is not reduced mod pi.
std::optional<double> labeled_angle(const QuadraticForm& q, int label);

/// Direction of the eigenvector for the larger eigenvalue. Empty for an
/// isotropic form.
std::optional<double> eigen_angle(const QuadraticForm& q);

enum class FieldChoice { kLabel1, kLabel2, kEigen };

using FormField = std::function<QuadraticForm(Point2)>;
/// Direction (any representative angle) at a point, empty where undefined.
using AngleField = std::function<std::optional<double>(Point2)>;

struct LineFieldIndex {
  double raw = 0.0;
  /// raw snapped to the nearest multiple of 1/2 when within 0.05.
  double value = 0.0;
  bool snapped = false;
  int samples = 0;
  double radius = 0.0;
};

/// Winding of the chosen line field along the circle of `radius` about
/// `center`, in turns. Starts at `samples` and doubles up to 2^14 when
/// consecutive directions jump by more than pi/4. Halves the radius (up to 8
/// times) while the field is undefined somewhere on the loop; throws
/// kDegenerate if it never becomes defined, kInternal on persistent jumps.
LineFieldIndex line_field_index(const FormField& field, Point2 center, FieldChoice choice,
                                double radius = 0.05, int samples = 512);

/// Same walk for a field given by its angles. Samples sit at angles
/// 2 pi (k + phase) / n on the loop.
LineFieldIndex line_field_index(const AngleField& field, Point2 center, double radius = 0.05,
                                int samples = 512, double phase = 0.0);

/// Nearest multiple of 1/2 when within `tolerance`, else `value`.
double snap_half(double value, double tolerance = 0.05, bool* snapped = nullptr);

}  // namespace parabolica
