#include "parabolica/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parabolica/errors.hpp"
#include "parabolica/resultant.hpp"
#include "parabolica/roots.hpp"

namespace parabolica {

namespace {

struct Residual {
  const DenseEvaluator& p;
  const DenseEvaluator& q;

  double operator()(Point2 z) const {
    const double sp = p.magnitude(z.x, z.y) + 1e-300;
    const double sq = q.magnitude(z.x, z.y) + 1e-300;
    return std::max(std::fabs(p(z.x, z.y)) / sp, std::fabs(q(z.x, z.y)) / sq);
  }
};

bool newton(const DenseEvaluator& p, const DenseEvaluator& q, Point2& z, double precision) {
  for (int it = 0; it < 60; ++it) {
    const double fp = p(z.x, z.y), fq = q(z.x, z.y);
    const Point2 gp = p.gradient(z.x, z.y), gq = q.gradient(z.x, z.y);
    const double det = gp.x * gq.y - gp.y * gq.x;
    if (det == 0.0 || !std::isfinite(det)) return false;
    const Point2 step{(fp * gq.y - fq * gp.y) / det, (gp.x * fq - gq.x * fp) / det};
    z = z - step;
    if (!std::isfinite(z.x) || !std::isfinite(z.y)) return false;
    if (norm(step) <= precision * 1e-2 * std::max(1.0, norm(z))) return true;
  }
  return true;  // caller judges by residual
}

std::vector<double> candidates(const UnivariatePoly& r, double lo, double hi, bool bounded, double precision) {
  std::optional<RationalInterval> iv;
  if (bounded) iv = RationalInterval{exact_rational(lo), exact_rational(hi)};
  return real_roots(r, iv, exact_rational(precision)).values();
}

bool univariate_in(const BivariatePoly& p, bool in_x) {
  return in_x ? p.degree_in_y() <= 0 : p.degree_in_x() <= 0;
}

}  // namespace

SystemSolution solve_system(const BivariatePoly& p, const BivariatePoly& q, const SolveOptions& options) {
  if (p.is_zero() || q.is_zero()) {
    throw Error(ErrorCode::kSharedComponent, "shared component suspected: an input is identically zero");
  }
  SystemSolution out;
  if (p.is_constant() || q.is_constant()) return out;

  // Two polynomials in x alone: their common zeros are whole vertical lines.
  for (bool in_x : {true, false}) {
    if (univariate_in(p, in_x) && univariate_in(q, in_x)) {
      const UnivariatePoly a = in_x ? p.restrict_y(0) : p.restrict_x(0);
      const UnivariatePoly b = in_x ? q.restrict_y(0) : q.restrict_x(0);
      const UnivariatePoly g = gcd(a, b);
      if (g.degree() >= 1 && !real_roots(g).empty()) {
        throw Error(ErrorCode::kSharedComponent, "shared component suspected: common line factor");
      }
      return out;
    }
  }

  const UnivariatePoly rx = resultant_y(p, q);
  const UnivariatePoly ry = resultant_x(p, q);
  if (rx.is_zero() || ry.is_zero()) {
    throw Error(ErrorCode::kSharedComponent, "shared component suspected: resultant vanishes identically");
  }
  const bool bounded = options.box.has_value();
  const Box box = options.box.value_or(Box{});
  const std::vector<double> xs =
      rx.degree() >= 1 ? candidates(rx, box.xmin, box.xmax, bounded, options.precision) : std::vector<double>{};
  const std::vector<double> ys =
      ry.degree() >= 1 ? candidates(ry, box.ymin, box.ymax, bounded, options.precision) : std::vector<double>{};

  const DenseEvaluator ep(p), eq(q);
  const Residual residual{ep, eq};
  const double accept = 1e-9;
  const double dedupe = 10.0 * options.precision;

  for (double x : xs) {
    for (double y : ys) {
      Point2 z{x, y};
      if (residual(z) > 1e-5) continue;
      const Point2 start = z;
      const bool ok = newton(ep, eq, z, options.precision);
      if (!ok || residual(z) > accept || distance(z, start) > 1e-4 * std::max(1.0, norm(start))) {
        // Tangential intersections make Newton crawl; the candidate itself
        // may still be good.
        if (residual(start) <= accept) {
          z = start;
        } else {
          std::ostringstream msg;
          msg.precision(12);
          msg << "Newton divergence near (" << start.x << ", " << start.y << ")";
          out.warnings.push_back(msg.str());
          continue;
        }
      }
      if (bounded && !box.contains(z)) continue;
      const bool seen = std::any_of(out.points.begin(), out.points.end(), [&](Point2 w) {
        return distance(w, z) <= dedupe * std::max(1.0, norm(z));
      });
      if (!seen) out.points.push_back(z);
    }
  }
  std::sort(out.points.begin(), out.points.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  return out;
}

}  // namespace parabolica
