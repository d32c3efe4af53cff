#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/geometry.hpp"
#include "parabolica/line_field.hpp"
#include "parabolica/rational.hpp"
#include "parabolica/trivariate.hpp"

namespace parabolica {

/// Quadratic differential form on the Poincare sphere extending the second
/// fundamental form. Variables (u, v, w) with w the height coordinate.
struct EdlaForm {
  int n = 0;
  TrivariateHomogeneousPoly F;  // sum_i w^(n-i) f_i(u, v)
  TrivariateHomogeneousPoly Fuu, Fuv, Fvv;
  TrivariateHomogeneousPoly A;  // -u F_uu - v F_uv
  TrivariateHomogeneousPoly B;  // -u F_uv - v F_vv
  TrivariateHomogeneousPoly S;  // u^2 F_uu + 2 u v F_uv + v^2 F_vv
  /// F_uu F_vv - F_uv^2, the homogenized Hessian.
  TrivariateHomogeneousPoly H;
};

/// Builds the form and checks, exactly: S = sum_k k(k-1) w^(n-k) f_k,
/// S(u, v, 0) = n(n-1) f_n and u A + v B + S = 0. Throws kDegreeTooLow for
/// n < 3 and kInternal if an identity fails.
EdlaForm edla(const BivariatePoly& f);

/// The form restricted to the chart u = sigma (sigma = +1 or -1), as
/// polynomials in (v, w): dvdv dv^2 + dvdw dv dw + dwdw dw^2.
struct ChartForm {
  int sigma = 1;
  BivariatePoly dvdv;  // w^2 F_vv(sigma, v, w)
  BivariatePoly dvdw;  // 2 w B(sigma, v, w)
  BivariatePoly dwdw;  // S(sigma, v, w)
  /// (dvdw / 2)^2 - dvdv dwdw
  BivariatePoly discriminant() const;
};

/// Checks the discriminant identity -w^2 H_f(sigma, v, w) exactly; throws
/// kInternal if it fails.
ChartForm chart_form(const EdlaForm& e, int sigma = 1);

/// P(sigma, v, w) as a polynomial in (v, w).
BivariatePoly chart_restriction(const TrivariateHomogeneousPoly& p, int sigma);

struct ProjectiveIndex {
  /// 1/2 for odd n, 1 for even n.
  double rule = 0.5;
  /// Winding of the projective extensions of the labeled fields X_1, X_2.
  LineFieldIndex x1, x2;
  /// Odd n: both 1/2. Even n: one is 1 and the other 0.
  bool consistent = false;
};

struct AppendixLinearization {
  /// a_{n-1,1} in coordinates where the defining factor is y, p = (1, 0, 0).
  double a = 0.0;
  std::array<std::array<double, 2>, 2> DY1{}, DY2{};
  std::array<double, 2> eigen1{}, eigen2{};
  /// Field whose linear part has two same-sign nonzero eigenvalues.
  int node_field = 0;
  /// 2 when a > 0, else 1.
  int expected_node_field = 0;
  /// The normalizing rotation was rational and the checks exact.
  bool exact = false;
  /// max |T1 T2 - 4 S F_vv| / scale over sample points near p.
  double identity_residual = 0.0;
  bool identity_holds = false;
  bool pass = false;
};

struct InfinitySingularPoint {
  Point3 equator_point;
  /// Real linear factor of f_n vanishing at the point.
  std::string linear_factor;
  int multiplicity = 1;
  std::size_t antipode = 0;
  /// Winding of the two labeled fields of the chart form.
  LineFieldIndex index_Y1, index_Y2;
  ProjectiveIndex projective;
  double a_coeff = 0.0;
  AppendixLinearization linearization;
};

struct InfinityAnalysis {
  std::vector<InfinitySingularPoint> points;
  /// Distinct real linear factors of f_n.
  int k = 0;
  bool squarefree = true;
  std::vector<std::string> flags;

  double sum_index_Y1() const;
  double sum_index_Y2() const;
  /// Sum over the classes [p] of the projective index of X_1 (or X_2).
  double sum_projective(int label) const;
};

/// Zeros of f_n on the equator, in antipodal pairs, with their indices.
/// Throws kDegreeTooLow for n < 3.
InfinityAnalysis singular_points_at_infinity(const BivariatePoly& f);

/// Linear part of the separated fields at p (see InfinitySingularPoint).
/// Throws kRepeatedFactor when a_{n-1,1} vanishes.
AppendixLinearization appendix_linearization(const BivariatePoly& f, Point3 p);

/// Numeric index of the projective extensions at the class of p, with the
/// parity rule alongside.
ProjectiveIndex projective_index(const BivariatePoly& f, Point3 p);

struct ArnoldIndex {
  /// 1 - Z/4, Z the number of zeros of h on the unit circle.
  Rational formula;
  int zeros = 0;
  /// Winding of the asymptotic field along the unit circle; unset for
  /// elliptic h, where the field is empty.
  std::optional<LineFieldIndex> winding;
  bool agrees = true;
};

/// Throws kInvalidArgument unless h is homogeneous and hyperbolic or elliptic.
ArnoldIndex arnold_index(const BivariatePoly& h);

/// Integral curve of a labeled field of the chart form u = sigma starting at
/// (v0, w0), fixed-step midpoint scheme with continuity in RP^1.
std::vector<Point2> integrate_chart_field(const ChartForm& form, Point2 start, int label,
                                          double step, int steps);

}  // namespace parabolica
