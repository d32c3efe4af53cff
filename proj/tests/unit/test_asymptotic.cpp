#include <cmath>
#include <numbers>

#include "doctest.h"
#include "parabolica/asymptotic.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/text.hpp"

using namespace parabolica;

namespace {
BivariatePoly P(const char* s) { return parse_polynomial(s); }
const char* kQ = "x^2 + y^2 + y*(x^2 + y^2)";
const char* kG = "y*(x+3)*(x-y)*(y+x-3)";
constexpr double kPi = std::numbers::pi;

void check_certificate(const BivariatePoly& f, const Godron& g) {
  const DenseEvaluator ef(f), eh(hessian(f));
  const Point2 v = g.direction.unit();
  const Point2 grad = eh.gradient(g.location.x, g.location.y);
  CHECK(std::abs(dot(grad, v)) < 1e-7 * std::max(1.0, norm(grad)));
  const QuadraticForm q = second_fundamental_form(ef, g.location);
  CHECK(std::abs(q(v)) < 1e-7 * std::max(1.0, std::abs(q.a) + std::abs(q.b) + std::abs(q.c)));
}
}  // namespace

TEST_CASE("asymptotic directions of quadrics") {
  auto d = asymptotic_directions(P("x*y"), {0.3, -2.0});
  REQUIRE(d.size() == 2);
  CHECK(distance(d[0], DirectionP1::from_angle(0.0)) + distance(d[1], DirectionP1::from_angle(kPi / 2)) <
            1e-12 + distance(d[1], DirectionP1::from_angle(0.0)) + distance(d[0], DirectionP1::from_angle(kPi / 2)));
  auto e = asymptotic_directions(P("x^2 - y^2"), {1.0, 1.0});
  REQUIRE(e.size() == 2);
  std::vector<double> angles{e[0].angle, e[1].angle};
  std::sort(angles.begin(), angles.end());
  CHECK(angles[0] == doctest::Approx(kPi / 4));
  CHECK(angles[1] == doctest::Approx(3 * kPi / 4));
  CHECK(asymptotic_directions(P("x^2 + y^2"), {0.0, 0.0}).empty());
  CHECK_THROWS_AS(asymptotic_directions(P("x^3 + y^3"), {0.0, 0.0}), Error);
}

TEST_CASE("q has a double direction at its godron, tangent to the hyperbola") {
  const auto f = P(kQ);
  const auto d = asymptotic_directions(f, {0.0, -1.0});
  REQUIRE(d.size() == 1);
  const Point2 grad = DenseEvaluator(hessian(f)).gradient(0.0, -1.0);
  CHECK(std::abs(dot(grad, d[0].unit())) < 1e-12);
}

TEST_CASE("integral curves of xy are the coordinate lines") {
  const auto f = P("x*y");
  bool found = false;
  for (int branch : {1, 2}) {
    const auto c = integrate_asymptotic_curve(f, {1.0, 1.0}, branch, 0.01, 2.0);
    REQUIRE(c.points.size() > 100);
    if (distance(c.directions.front(), DirectionP1::from_angle(0.0)) > 1e-9) continue;
    found = true;
    for (const auto& p : c.points) CHECK(p.y == doctest::Approx(1.0));
    CHECK(c.stop == StopReason::kMaxLength);
  }
  CHECK(found);
}

TEST_CASE("asymptotic curves of q end on the parabolic curve") {
  const auto f = P(kQ);
  const DenseEvaluator eh(hessian(f));
  int ended = 0;
  for (int branch : {1, 2}) {
    for (bool reverse : {false, true}) {
      const auto c = integrate_asymptotic_curve(f, {3.0, 0.0}, branch, 1e-3, 50.0, std::nullopt, reverse);
      REQUIRE_FALSE(c.points.empty());
      if (c.stop != StopReason::kDomainBoundary) continue;
      ++ended;
      const Point2 last = c.points.back();
      CHECK(std::abs(eh(last.x, last.y)) < 0.05 * eh.magnitude(last.x, last.y));
    }
  }
  CHECK(ended == 3);
  const auto inside = integrate_asymptotic_curve(f, {0.5, 0.0}, 1, 1e-3, 1.0);
  CHECK(inside.points.empty());
  CHECK(inside.stop == StopReason::kDomainBoundary);
}

TEST_CASE("curves near a line of g stay on it") {
  const auto f = P(kG);
  for (int branch : {1, 2}) {
    const auto c = integrate_asymptotic_curve(f, {1.0, 0.0}, branch, 1e-3, 0.5);
    if (distance(c.directions.front(), DirectionP1::from_angle(0.0)) > 1e-6) continue;
    for (const auto& p : c.points) CHECK(std::abs(p.y) < 1e-6);
  }
}

TEST_CASE("integration stops at a box and reports flat and elliptic starts") {
  const auto f = P(kQ);
  const auto c = integrate_asymptotic_curve(f, {3.0, 0.0}, 2, 1e-2, 100.0, Box::square(4.0));
  CHECK((c.stop == StopReason::kBox || c.stop == StopReason::kDomainBoundary));
  CHECK(integrate_asymptotic_curve(f, {0.0, 0.0}, 1, 1e-2, 1.0).stop == StopReason::kDomainBoundary);
  CHECK(integrate_asymptotic_curve(P("x^3 + y^3"), {0.0, 0.0}, 1, 1e-2, 1.0).stop == StopReason::kFlatPoint);
  CHECK_THROWS_AS(integrate_asymptotic_curve(f, {3.0, 0.0}, 3, 1e-2, 1.0), Error);
}

TEST_CASE("tangency polynomial of x^2 + y^3") {
  const auto [g1, g2] = tangency_polynomial(P("x^2 + y^3"));
  CHECK(g1 == P("24"));
  CHECK(g2 == P("0"));
  CHECK(find_godrons(P("x^2 + y^3")).godrons.empty());
}

TEST_CASE("godrons of q and g") {
  const auto fq = P(kQ);
  const auto q = find_godrons(fq);
  REQUIRE(q.godrons.size() == 1);
  CHECK(q.godrons[0].location.x == doctest::Approx(0.0));
  CHECK(q.godrons[0].location.y == doctest::Approx(-1.0));
  CHECK(q.godrons[0].tangency == Tangency::kInterior);
  check_certificate(fq, q.godrons[0]);

  const auto fg = P(kG);
  const auto g = find_godrons(fg);
  CHECK(g.godrons.size() == 8);
  CHECK(g.interior() == 8);
  CHECK(g.exterior() == 0);
  for (const auto& d : g.godrons) check_certificate(fg, d);
}

TEST_CASE("godron edge cases") {
  CHECK(find_godrons(P("x^2 + y^2")).godrons.empty());
  CHECK_THROWS_AS(find_godrons(P("x^3 + x")), Error);
}

TEST_CASE("tangency follows the asymptotic curve, not the tangent line") {
  // At (4^(-1/3), 0) the tangent line leaves the hyperbolic side, but both
  // integral curves through the point stay inside it.
  const auto f = P("x^5 - 4*x^3*y^2 + 2*x*y^4 + x^2 + y^2");
  const auto s = find_godrons(f);
  REQUIRE(s.godrons.size() == 5);
  bool seen = false;
  for (const auto& g : s.godrons) {
    CHECK(g.tangency == Tangency::kInterior);
    if (std::abs(g.location.y) < 1e-9) {
      seen = true;
      CHECK(g.location.x == doctest::Approx(std::cbrt(0.25)));
      CHECK(g.second_derivative > 0.0);
      CHECK(g.contact_discriminant > 0.0);
    }
  }
  CHECK(seen);
}

TEST_CASE("godron normal form y^2/2 - x^2 y + r x^4 / 2") {
  struct Case {
    const char* f;
    bool interior;
    bool degenerate;
  };
  // Integral curves y = c x^2 solve 4c^2 - 10c + 6r = 0: real iff r <= 25/24.
  for (const Case& c : {Case{"y^2/2 - x^2*y + x^4/4 + x^3*y", true, false},
                        Case{"y^2/2 - x^2*y + 9/20*x^4 + x^3*y", true, false},
                        Case{"y^2/2 - x^2*y + 3/5*x^4 + x^3*y", false, false},
                        Case{"y^2/2 - x^2*y + x^4/2 + x^3*y", true, true}}) {
    CAPTURE(c.f);
    const auto s = find_godrons(P(c.f));
    const Godron* origin = nullptr;
    for (const auto& g : s.godrons) {
      if (norm(g.location) < 1e-9) origin = &g;
    }
    REQUIRE(origin != nullptr);
    CHECK(origin->degenerate == c.degenerate);
    if (!c.degenerate) CHECK((origin->tangency == Tangency::kInterior) == c.interior);
  }
}
