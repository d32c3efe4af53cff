#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/geometry.hpp"

namespace parabolica {

/// A traced piece of an implicit curve.
struct CurveComponent {
  std::vector<Point2> points;
  /// "affine" for the z = 1 plane, "disk" for the projective disk chart.
  std::string chart = "affine";
  bool closed = false;
  int nesting_depth = 0;
  /// Lift to the unit sphere; filled by the projective analysis.
  std::vector<Point3> sphere;
  /// Number of passages through the line at infinity.
  int infinity_crossings = 0;
  bool oval = true;
};

/// Scalar field sampled by the tracer; `magnitude` is the natural scale for
/// the residual test at a point.
struct ImplicitFunction {
  std::function<double(double, double)> value;
  std::function<double(double, double)> magnitude;
};

ImplicitFunction implicit_function(const BivariatePoly& p);

/// Zero set of `fn` in `box`, sampled on a square grid of the given step.
/// Sign changes along cell edges are located by bisection; saddle cells are
/// resolved by the centre value. Open components end on the box boundary.
/// Throws kSingularCurve when a saddle cell stays a saddle after 2x2 and 4x4
/// subdivision, and kZeroInput for an identically zero polynomial.
std::vector<CurveComponent> trace_curve(const ImplicitFunction& fn, const Box& box, double step);
std::vector<CurveComponent> trace_curve(const BivariatePoly& p, const Box& box, double step);

/// Largest residual |p| / magnitude over a component's points.
double max_relative_residual(const ImplicitFunction& fn, const CurveComponent& c);

}  // namespace parabolica
