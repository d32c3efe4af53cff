#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/classify.hpp"
#include "parabolica/curve_trace.hpp"
#include "parabolica/roots.hpp"
#include "parabolica/trivariate.hpp"

namespace parabolica {

inline constexpr std::uint64_t kDefaultSeed = 20140917;

struct TopologyOptions {
  /// Grid cells per axis of the disk chart.
  int grid = 600;
  std::uint64_t seed = kDefaultSeed;
};

/// Projective Hessian curve H_f = 0 in RP^2.
///
/// RP^2 is drawn as the closed unit disk: (s, t) stands for the point
/// [L s : L t : 1 - s^2 - t^2], antipodal boundary points identified. L is a
/// length scale of Hess f so the affine features sit well inside the disk.
struct CurveTopology {
  std::vector<CurveComponent> components;  // chart "disk"
  int P = 0;  // ovals at even depth
  int N = 0;  // ovals at odd depth
  bool pseudo_line = false;
  bool transversal_to_infinity = false;
  int chi_B_plus = 0;
  int chi_B_minus = 1;
  /// Real zeros of Hess f_n: where the curve meets the line at infinity.
  std::vector<ProjectiveZero> infinity_points;
  /// Class of the points of B-, the region outside every oval.
  PointClass b_minus_class = PointClass::kHyperbolic;
  double scale = 1.0;
  /// Ovals whose crossing-parity test disagreed with the chart count.
  int parity_disagreements = 0;

  int oval_count() const { return P + N; }
  /// "H" when the hyperbolic region lies in B-, "E" otherwise.
  std::string b_minus_contains() const { return b_minus_class == PointClass::kHyperbolic ? "H" : "E"; }
};

/// Length scale used by the disk chart.
double characteristic_length(const BivariatePoly& hess);

/// H_f(L s, L t, 1 - s^2 - t^2) as an exact polynomial in (s, t).
BivariatePoly disk_chart_polynomial(const TrivariateHomogeneousPoly& h, const Rational& scale);

/// Throws kDegreeTooLow (n < 3), kDegenerate (Hess f or Hess f_n vanishes
/// identically), kTangentToInfinity (even-multiplicity zero of Hess f_n),
/// kSingularCurve and kTracingInconsistency.
CurveTopology projective_topology(const BivariatePoly& f, const TopologyOptions& options = {});

struct PetrowskyVerdict {
  int k = 0;
  /// -(3/2) k (k - 1), possibly half-integral, doubled to stay integral.
  int twice_lower = 0;
  int twice_upper = 0;
  int value = 0;  // P - N
  bool pass = false;

  double lower() const { return twice_lower / 2.0; }
  double upper() const { return twice_upper / 2.0; }
};

/// Bounds for a curve of degree m = 2k. Throws kOddDegree for odd m.
PetrowskyVerdict petrowsky_check(const CurveTopology& top, int degree);

}  // namespace parabolica
