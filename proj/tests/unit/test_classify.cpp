#include "doctest.h"
#include "parabolica/classify.hpp"
#include "parabolica/curve_trace.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/text.hpp"

using namespace parabolica;

namespace {
BivariatePoly P(const char* s) { return parse_polynomial(s); }
const char* kQ = "x^2 + y^2 + y*(x^2 + y^2)";
const char* kG = "y*(x+3)*(x-y)*(y+x-3)";
const char* kPairF = "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2 + 10*y^2 - 10*x^2";
}  // namespace

TEST_CASE("finite points") {
  CHECK(classify_point(P("x*y"), Rational(3), Rational(-2)).cls == PointClass::kHyperbolic);
  const auto origin = classify_point(P(kQ), Rational(0), Rational(0));
  CHECK(origin.cls == PointClass::kElliptic);
  CHECK(origin.value == doctest::Approx(4.0));
  CHECK(classify_point(P(kQ), Rational(0), Rational(-1, 3)).cls == PointClass::kParabolic);
  CHECK(classify_point(P(kQ), Rational(5), Rational(0)).cls == PointClass::kHyperbolic);
}

TEST_CASE("a traced point of the pair quartic is numerically parabolic") {
  const auto f = P(kPairF);
  const auto comps = trace_curve(hessian(f), Box::square(3.0), 0.01);
  REQUIRE_FALSE(comps.empty());
  const Point2 p = comps.front().points[comps.front().points.size() / 2];
  CHECK(classify_point(f, p).cls == PointClass::kParabolic);
}

TEST_CASE("points at infinity") {
  // f_4 = x^4 + 6 mu x^2 y^2 + y^4 with mu = 1/2
  const auto e = P("x^4 + 3*x^2*y^2 + y^4 + x*y");
  for (double t : {0.0, 0.4, 1.3, 2.9}) CHECK(classify_infinity(e, std::cos(t), std::sin(t)) == PointClass::kElliptic);
  CHECK(classify_infinity(P(kG), 1.0, 0.0) == PointClass::kHyperbolic);
  CHECK(classify_infinity(P("x^3*y - x*y^3 + x"), 1.0, 0.0) == PointClass::kHyperbolic);
  CHECK_THROWS_AS(classify_infinity(P("x^2 + y"), 1.0, 0.0), Error);
}

TEST_CASE("homogeneous classes") {
  CHECK(homogeneous_class(P("y*x*(x - y)*(x + y)")).kind == HomogeneousKind::kHyperbolic);
  CHECK(homogeneous_class(P("x^4 + 3*x^2*y^2 + y^4")).kind == HomogeneousKind::kElliptic);
  const auto neither = homogeneous_class(P("x^2*y^2"));
  CHECK(neither.kind == HomogeneousKind::kNeither);
  CHECK_FALSE(neither.witness.empty());
  CHECK(homogeneous_class(P("x^3 - 3*x*y^2")).kind == HomogeneousKind::kHyperbolic);
  CHECK(homogeneous_class(P("x^2 + y^2")).kind == HomogeneousKind::kElliptic);
  CHECK_THROWS_AS(homogeneous_class(P("x^2 + y")), Error);
}

TEST_CASE("compactness verdicts") {
  const auto g = compactness_verdict(P(kG));
  CHECK(g.hessian_compact);
  REQUIRE(g.unbounded_component_class);
  CHECK(*g.unbounded_component_class == PointClass::kHyperbolic);

  CHECK_FALSE(compactness_verdict(P(kQ)).hessian_compact);

  const auto e = compactness_verdict(P("x^4 + 3*x^2*y^2 + y^4 + x*y^2 - x^2"));
  CHECK(e.hessian_compact);
  REQUIRE(e.unbounded_component_class);
  CHECK(*e.unbounded_component_class == PointClass::kElliptic);
}
