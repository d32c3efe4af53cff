#include "parabolica/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parabolica/errors.hpp"
#include "parabolica/system.hpp"

namespace parabolica {

namespace {

double form_scale(const QuadraticForm& q) { return std::abs(q.a) + 2.0 * std::abs(q.b) + std::abs(q.c); }

// Directions at p with orientation; empty optional outside the closure of
// the hyperbolic domain.
struct LocalField {
  const DenseEvaluator& f;

  std::optional<Point2> closest(Point2 p, Point2 previous, StopReason& why) const {
    const QuadraticForm q = second_fundamental_form(f, p);
    const double scale = form_scale(q);
    if (scale == 0.0) {
      why = StopReason::kFlatPoint;
      return std::nullopt;
    }
    if (q.discriminant() <= 1e-10 * scale * scale) {
      why = StopReason::kDomainBoundary;
      return std::nullopt;
    }
    Point2 best{};
    double best_dot = -1.0;
    for (int label : {1, 2}) {
      const auto t = labeled_angle(q, label);
      if (!t) continue;
      Point2 d{std::cos(*t), std::sin(*t)};
      if (dot(d, previous) < 0.0) d = -1.0 * d;
      if (dot(d, previous) > best_dot) {
        best_dot = dot(d, previous);
        best = d;
      }
    }
    if (best_dot < 0.0) {
      why = StopReason::kDomainBoundary;
      return std::nullopt;
    }
    return best;
  }
};

}  // namespace

QuadraticForm second_fundamental_form(const DenseEvaluator& f, Point2 p) {
  QuadraticForm q;
  f.second_derivatives(p.x, p.y, q.a, q.b, q.c);
  return q;
}

std::vector<DirectionP1> asymptotic_directions(const BivariatePoly& f, Point2 p) {
  const Rational x = exact_rational(p.x);
  const Rational y = exact_rational(p.y);
  const Rational fxx = f.dx().dx()(x, y);
  const Rational fxy = f.dx().dy()(x, y);
  const Rational fyy = f.dy().dy()(x, y);
  if (fxx == 0 && fxy == 0 && fyy == 0) {
    throw Error(ErrorCode::kFlatPoint, "flat point of the second fundamental form");
  }
  const int s = sign(Rational(fxy * fxy - fxx * fyy));
  if (s < 0) return {};
  const QuadraticForm q{to_double(fxx), to_double(fxy), to_double(fyy)};
  const auto t1 = labeled_angle(q, 1);
  if (s == 0) {
    // Double direction: the kernel of the form.
    const Point2 k = (fxx != 0 || fxy != 0) ? Point2{-q.b, q.a} : Point2{q.c, -q.b};
    return {DirectionP1::from_angle(std::atan2(k.y, k.x))};
  }
  const auto t2 = labeled_angle(q, 2);
  std::vector<DirectionP1> out{DirectionP1::from_angle(*t1), DirectionP1::from_angle(*t2)};
  std::sort(out.begin(), out.end(), [](DirectionP1 u, DirectionP1 v) { return u.angle < v.angle; });
  return out;
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::kMaxLength:
      return "max_length";
    case StopReason::kDomainBoundary:
      return "domain_boundary";
    case StopReason::kFlatPoint:
      return "flat_point";
    case StopReason::kBox:
      return "box";
  }
  return "?";
}

AsymptoticCurve integrate_asymptotic_curve(const BivariatePoly& f, Point2 p0, int branch, double step,
                                           double max_length, const std::optional<Box>& box, bool reverse) {
  if (branch != 1 && branch != 2) throw Error(ErrorCode::kInvalidArgument, "branch must be 1 or 2");
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step must be positive");
  const DenseEvaluator ev(f);
  const LocalField field{ev};
  AsymptoticCurve out;
  const QuadraticForm q0 = second_fundamental_form(ev, p0);
  if (form_scale(q0) == 0.0) {
    out.stop = StopReason::kFlatPoint;
    return out;
  }
  const auto t0 = labeled_angle(q0, branch);
  if (!t0 || q0.discriminant() <= 0.0) {
    out.stop = StopReason::kDomainBoundary;
    return out;
  }
  Point2 p = p0;
  Point2 d{std::cos(*t0), std::sin(*t0)};
  if (reverse) d = -1.0 * d;
  out.points.push_back(p);
  out.directions.push_back(DirectionP1::from_angle(*t0));
  double length = 0.0;
  while (length + step <= max_length * (1.0 + 1e-12)) {
    StopReason why = StopReason::kMaxLength;
    const auto dm = field.closest(p + 0.5 * step * d, d, why);
    if (!dm) {
      out.stop = why;
      return out;
    }
    const Point2 next = p + step * *dm;
    if (box && !box->contains(next)) {
      out.stop = StopReason::kBox;
      return out;
    }
    const auto dn = field.closest(next, *dm, why);
    if (!dn) {
      out.stop = why;
      return out;
    }
    p = next;
    d = *dn;
    length += step;
    out.points.push_back(p);
    out.directions.push_back(DirectionP1::from_angle(std::atan2(d.y, d.x)));
  }
  out.stop = StopReason::kMaxLength;
  return out;
}

std::pair<BivariatePoly, BivariatePoly> tangency_polynomial(const BivariatePoly& f) {
  if (f.degree() < 3) throw Error(ErrorCode::kDegreeTooLow, "degree too low: tangency polynomial needs deg f >= 3");
  const BivariatePoly h = hessian(f);
  const BivariatePoly hx = h.dx(), hy = h.dy();
  const BivariatePoly fxx = f.dx().dx(), fxy = f.dx().dy(), fyy = f.dy().dy();
  return {hy * fxx - hx * fxy, hx * fyy - hy * fxy};
}

std::string_view to_string(Tangency t) { return t == Tangency::kInterior ? "interior" : "exterior"; }

int GodronSearch::interior() const {
  return static_cast<int>(std::count_if(godrons.begin(), godrons.end(), [](const Godron& g) {
    return !g.degenerate && g.tangency == Tangency::kInterior;
  }));
}

int GodronSearch::exterior() const {
  return static_cast<int>(std::count_if(godrons.begin(), godrons.end(), [](const Godron& g) {
    return !g.degenerate && g.tangency == Tangency::kExterior;
  }));
}

GodronSearch find_godrons(const BivariatePoly& f, const std::optional<Box>& box) {
  const BivariatePoly h = hessian(f);
  GodronSearch out;
  if (h.is_zero()) throw Error(ErrorCode::kDegenerate, "Hessian vanishes identically: every point is parabolic");
  if (h.is_constant()) return out;
  const auto [g1, g2] = tangency_polynomial(f);

  const DenseEvaluator ef(f), eh(h);
  SolveOptions opts;
  opts.box = box;

  // Kernel representatives of the form on the Hessian curve.
  const auto rep = [&](Point2 p, int which) {
    double a, b, c;
    ef.second_derivatives(p.x, p.y, a, b, c);
    return which == 1 ? Point2{-b, a} : Point2{c, -b};
  };
  const auto form_norm = [&](Point2 p) {
    double a, b, c;
    ef.second_derivatives(p.x, p.y, a, b, c);
    return std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
  };

  const DenseEvaluator fx(f.dx()), fy(f.dy()), fxx(f.dx().dx()), fyy(f.dy().dy());
  struct Contact {
    double a, k, e;
  };
  const auto contact = [&](Point2 p, Point2 v) {
    const Point2 n{-v.y, v.x};
    double xx, xy, yy;
    ef.second_derivatives(p.x, p.y, xx, xy, yy);
    Contact out;
    out.a = xx * n.x * n.x + 2.0 * xy * n.x * n.y + yy * n.y * n.y;
    double xxx, xxy, xyy, yxx, yxy, yyy;
    fx.second_derivatives(p.x, p.y, xxx, xxy, xyy);
    fy.second_derivatives(p.x, p.y, yxx, yxy, yyy);
    out.k = xxx * v.x * v.x * n.x + xxy * (v.x * v.x * n.y + 2.0 * v.x * v.y * n.x) +
            xyy * (v.y * v.y * n.x + 2.0 * v.x * v.y * n.y) + yyy * v.y * v.y * n.y;
    double x4, x3y, x2y2, y2xx, xy3, y4;
    fxx.second_derivatives(p.x, p.y, x4, x3y, x2y2);
    fyy.second_derivatives(p.x, p.y, y2xx, xy3, y4);
    const double c = v.x, s = v.y;
    out.e = x4 * c * c * c * c + 4.0 * x3y * c * c * c * s + 6.0 * x2y2 * c * c * s * s + 4.0 * xy3 * c * s * s * s +
            y4 * s * s * s * s;
    return out;
  };

  std::vector<std::pair<Point2, int>> found;  // point, representative used
  int solved = 0;
  for (int which : {1, 2}) {
    const BivariatePoly& g = which == 1 ? g1 : g2;
    try {
      const SystemSolution sol = solve_system(h, g, opts);
      ++solved;
      out.warnings.insert(out.warnings.end(), sol.warnings.begin(), sol.warnings.end());
      for (const Point2 p : sol.points) {
        if (norm(rep(p, which)) > 1e-8 * form_norm(p)) found.emplace_back(p, which);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSharedComponent) throw;
      // The other representative misses only the points where it vanishes;
      // pick those up directly and test tangency with this one.
      const BivariatePoly fxy = f.dx().dy();
      const BivariatePoly other = which == 1 ? f.dy().dy() : f.dx().dx();
      try {
        const SystemSolution sol = solve_system(fxy, other, opts);
        ++solved;
        for (const Point2 p : sol.points) {
          const Point2 v = rep(p, which);
          const Point2 grad = eh.gradient(p.x, p.y);
          if (norm(v) > 1e-8 * form_norm(p) &&
              std::abs(dot(grad, v)) <= 1e-8 * std::max(1.0, norm(grad)) * norm(v)) {
            found.emplace_back(p, which);
          }
        }
      } catch (const Error& inner) {
        if (inner.code() != ErrorCode::kSharedComponent) throw;
      }
    }
  }
  if (solved == 0) {
    throw Error(ErrorCode::kDegenerate, "tangency systems share a component with the Hessian curve");
  }

  for (const auto& [p, which] : found) {
    const bool seen = std::any_of(out.godrons.begin(), out.godrons.end(), [&](const Godron& g) {
      return distance(g.location, p) <= 1e-7 * std::max(1.0, norm(p));
    });
    if (seen) continue;
    // Use whichever representative is better conditioned here.
    Point2 v = rep(p, 1);
    if (norm(rep(p, 2)) > norm(v)) v = rep(p, 2);
    v = (1.0 / norm(v)) * v;
    double hxx, hxy, hyy;
    eh.second_derivatives(p.x, p.y, hxx, hxy, hyy);
    Godron g;
    g.location = p;
    g.direction = DirectionP1::from_angle(std::atan2(v.y, v.x));
    g.second_derivative = hxx * v.x * v.x + 2.0 * hxy * v.x * v.y + hyy * v.y * v.y;
    const Contact k = contact(p, v);
    g.contact_discriminant = 25.0 * k.k * k.k - 8.0 * k.a * k.e;
    const double scale = 25.0 * k.k * k.k + 8.0 * std::abs(k.a * k.e);
    const double grad_scale = std::abs(hxx) + 2.0 * std::abs(hxy) + std::abs(hyy) + form_norm(p);
    // a e = 3 k^2 is the cross-ratio value 1, where the tangency system has a
    // multiple root.
    g.degenerate = std::abs(g.contact_discriminant) < 1e-8 * std::max(scale, 1.0) ||
                   std::abs(k.a * k.e - 3.0 * k.k * k.k) < 1e-8 * std::max(scale, 1.0) ||
                   norm(eh.gradient(p.x, p.y)) < 1e-8 * std::max(grad_scale, 1.0);
    g.tangency = g.contact_discriminant > 0.0 ? Tangency::kInterior : Tangency::kExterior;
    if (g.degenerate) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "degenerate godron (non-generic) at (" << p.x << ", " << p.y << ")";
      out.errors.push_back(msg.str());
    }
    out.godrons.push_back(g);
  }
  std::sort(out.godrons.begin(), out.godrons.end(), [](const Godron& a, const Godron& b) {
    return a.location.x < b.location.x || (a.location.x == b.location.x && a.location.y < b.location.y);
  });
  return out;
}

}  // namespace parabolica
