#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "parabolica/errors.hpp"
#include "parabolica/sphere.hpp"
#include "parabolica/text.hpp"
#include "random_poly.hpp"

using namespace parabolica;

namespace {
BivariatePoly P(const char* s) { return parse_polynomial(s); }
const char* kQ = "x^2 + y^2 + y*(x^2 + y^2)";
const char* kG = "y*(x+3)*(x-y)*(y+x-3)";

std::array<double, 2> sorted(std::array<double, 2> a) {
  std::sort(a.begin(), a.end());
  return a;
}
}  // namespace

TEST_CASE("S for the cubic q") {
  const EdlaForm e = edla(P(kQ));
  CHECK(e.n == 3);
  CHECK(e.S.terms().size() == 4);
  CHECK(e.S.coefficient(2, 0, 1) == 2);
  CHECK(e.S.coefficient(0, 2, 1) == 2);
  CHECK(e.S.coefficient(2, 1, 0) == 6);
  CHECK(e.S.coefficient(0, 3, 0) == 6);
  CHECK(e.S.at_infinity() == Rational(6) * P("x^2*y + y^3"));
}

TEST_CASE("S of a form is n(n-1) times the form") {
  const auto f = P("x^3*y - 2*x*y^3 + y^4");
  const EdlaForm e = edla(f);
  CHECK(e.S == homogenize(f, 4) * Rational(12));
}

TEST_CASE("S at infinity and the Hessian, for random inputs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 4;
    const BivariatePoly f = testing::random_poly(rng, n);
    const EdlaForm e = edla(f);
    CHECK(e.S.at_infinity() == Rational(n * (n - 1)) * top_part(f));
    CHECK(e.H == projective_hessian(f));
  }
  CHECK_THROWS_AS(edla(P("x^2 + y")), Error);
}

TEST_CASE("chart form is the rescaled pull-back of the second fundamental form") {
  // x = sigma / w, y = v / w; the chart form is w^(n+2) J^T Hess f J.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> pick(-0.9, 0.9);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 4;
    const BivariatePoly f = testing::random_poly(rng, n);
    const DenseEvaluator ef(f);
    const EdlaForm e = edla(f);
    for (int sigma : {1, -1}) {
      const ChartForm c = chart_form(e, sigma);
      for (int k = 0; k < 5; ++k) {
        const double v = pick(rng);
        double w = pick(rng);
        if (std::abs(w) < 0.2) w = 0.5;
        double fxx, fxy, fyy;
        ef.second_derivatives(sigma / w, v / w, fxx, fxy, fyy);
        // Rows: dx = -sigma/w^2 dw, dy = dv/w - v/w^2 dw.
        const double j11 = 0.0, j12 = -sigma / (w * w), j21 = 1.0 / w, j22 = -v / (w * w);
        const double s = std::pow(w, n + 2);
        const double pvv = s * (fxx * j11 * j11 + 2 * fxy * j11 * j21 + fyy * j21 * j21);
        const double pvw = s * 2 * (fxx * j11 * j12 + fxy * (j11 * j22 + j21 * j12) + fyy * j21 * j22);
        const double pww = s * (fxx * j12 * j12 + 2 * fxy * j12 * j22 + fyy * j22 * j22);
        const double scale = 1.0 + std::abs(pvv) + std::abs(pvw) + std::abs(pww);
        CHECK(std::abs(c.dvdv.evaluate(v, w) - pvv) < 1e-9 * scale);
        CHECK(std::abs(c.dvdw.evaluate(v, w) - pvw) < 1e-9 * scale);
        CHECK(std::abs(c.dwdw.evaluate(v, w) - pww) < 1e-9 * scale);
      }
      const BivariatePoly w2 = BivariatePoly::monomial(Rational(-1), 0, 2);
      CHECK(c.discriminant() == w2 * chart_restriction(e.H, sigma));
    }
  }
}

TEST_CASE("homogeneous input: chart form on the equator") {
  const auto f = P("x^3*y - 2*x*y^3 + y^4");
  const ChartForm c = chart_form(edla(f), 1);
  CHECK(c.dvdv.restrict_y(Rational(0)).is_zero());
  CHECK(c.dvdw.restrict_y(Rational(0)).is_zero());
  CHECK(c.dwdw.restrict_y(Rational(0)) == f.dehomogenize_x() * Rational(12));
}

TEST_CASE("singular points at infinity") {
  const auto q = singular_points_at_infinity(P(kQ));
  REQUIRE(q.points.size() == 2);
  CHECK(q.k == 1);
  for (const auto& p : q.points) {
    CHECK(std::abs(p.equator_point.y) < 1e-12);
    CHECK(std::abs(std::abs(p.equator_point.x) - 1.0) < 1e-12);
    CHECK(std::abs(p.index_Y1.raw - 0.5) < 0.02);
    CHECK(std::abs(p.index_Y2.raw - 0.5) < 0.02);
    CHECK(p.projective.rule == 0.5);
    CHECK(p.projective.consistent);
  }
  CHECK(q.points[0].antipode == 1);

  const auto g = singular_points_at_infinity(P(kG));
  CHECK(g.points.size() == 8);
  CHECK(g.k == 4);
  CHECK(g.sum_index_Y1() == 4.0);
  CHECK(g.sum_index_Y2() == 4.0);
  CHECK(g.sum_projective(1) == 2.0);
  for (const auto& p : g.points) {
    CHECK(p.projective.rule == 1.0);
    CHECK(p.projective.x1.value + p.projective.x2.value == 1.0);
  }

  CHECK(singular_points_at_infinity(P("x^4 + 3*x^2*y^2 + y^4 + x")).points.empty());
}

TEST_CASE("line field index") {
  const FormField xy = [](Point2) { return QuadraticForm{0.0, 1.0, 0.0}; };
  CHECK(line_field_index(xy, {0.0, 0.0}, FieldChoice::kLabel1).value == 0.0);
  // Radial-type field: the eigen field of x^2 + y^2 style forms.
  const FormField radial = [](Point2 p) { return QuadraticForm{p.x, p.y, -p.x}; };
  const auto r = line_field_index(radial, {0.0, 0.0}, FieldChoice::kEigen);
  CHECK(std::abs(std::abs(r.value) - 0.5) < 1e-9);
  CHECK(snap_half(0.51) == 0.5);
  CHECK(snap_half(0.6) == 0.6);
}

TEST_CASE("Arnold index formula") {
  const auto lines = arnold_index(P("x*y*(x - y)*(x + y)"));
  CHECK(lines.zeros == 8);
  CHECK(lines.formula == -1);
  REQUIRE(lines.winding);
  CHECK(lines.agrees);
  const auto elliptic = arnold_index(P("x^4 + 3*x^2*y^2 + y^4"));
  CHECK(elliptic.formula == 1);
  CHECK_FALSE(elliptic.winding);
  CHECK(arnold_index(P("x^3 - 3*x*y^2")).formula == Rational(-1, 2));
  CHECK(arnold_index(P("x*y")).formula == 0);
  CHECK_THROWS_AS(arnold_index(P("x^2*y^2")), Error);
}

TEST_CASE("linear part of the separated fields at an equator point") {
  const auto q = appendix_linearization(P(kQ), {1.0, 0.0, 0.0});
  CHECK(q.a == 1.0);
  CHECK(q.exact);
  CHECK(q.node_field == 2);
  CHECK(q.expected_node_field == 2);
  CHECK(sorted(q.eigen2) == std::array<double, 2>{8.0, 12.0});
  CHECK(q.identity_holds);
  CHECK(q.pass);

  const auto neg = appendix_linearization(-P(kQ), {1.0, 0.0, 0.0});
  CHECK(neg.a == -1.0);
  CHECK(neg.node_field == 1);
  CHECK(neg.pass);

  CHECK_THROWS_AS(appendix_linearization(P("x*y^2 + x^2 + y"), {1.0, 0.0, 0.0}), Error);
  CHECK_THROWS_AS(appendix_linearization(P(kQ), {0.0, 1.0, 0.0}), Error);
}

TEST_CASE("projective index parity rule") {
  const auto q = projective_index(P(kQ), {1.0, 0.0, 0.0});
  CHECK(q.x1.value == 0.5);
  CHECK(q.x2.value == 0.5);
  const auto g = projective_index(P(kG), {1.0, 0.0, 0.0});
  CHECK(g.rule == 1.0);
  CHECK(g.x1.value + g.x2.value == 1.0);
  CHECK(g.consistent);
}

TEST_CASE("chart field integration stays finite") {
  const ChartForm c = chart_form(edla(P(kQ)), 1);
  const auto pts = integrate_chart_field(c, {0.3, 0.3}, 1, 1e-3, 200);
  REQUIRE_FALSE(pts.empty());
  for (const auto& p : pts) CHECK(std::isfinite(p.x + p.y));
}
