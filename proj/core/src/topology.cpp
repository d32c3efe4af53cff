#include "parabolica/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "parabolica/errors.hpp"

namespace parabolica {

namespace {

constexpr double kChartHalfWidth = 1.06;
constexpr double kSnapAngle = 0.05;
constexpr std::array<double, 3> kRayAngles = {0.3, 2.1, 4.4};

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return std::min(d, 2.0 * std::numbers::pi - d);
}

struct Arc {
  std::vector<Point2> points;
  int start_id = -1;
  int end_id = -1;
};

// Boundary point ids: 2j is the zero direction (u, v) of infinity point j,
// 2j + 1 its antipode.
class Clipper {
 public:
  explicit Clipper(const std::vector<ProjectiveZero>& zeros) : zeros_(zeros) {}

  std::vector<Arc> arcs;
  std::vector<std::vector<Point2>> loops;

  void add(const CurveComponent& c) {
    const auto& pts = c.points;
    if (pts.size() < 2) return;
    const auto inside = [](Point2 p) { return norm(p) < 1.0; };
    if (std::all_of(pts.begin(), pts.end(), inside)) {
      if (!c.closed) {
        throw Error(ErrorCode::kTracingInconsistency, "open branch ends inside the disk chart");
      }
      loops.push_back(pts);
      return;
    }
    std::vector<Point2> ring = pts;
    if (c.closed) {
      // Start at an outside point so every inside run is a complete arc.
      ring.pop_back();
      const auto it = std::find_if(ring.begin(), ring.end(), [&](Point2 p) { return !inside(p); });
      std::rotate(ring.begin(), it, ring.end());
      ring.push_back(ring.front());
    }
    std::vector<Point2> current;
    bool open = inside(ring.front());
    if (open) throw Error(ErrorCode::kTracingInconsistency, "branch starts inside the disk chart");
    for (std::size_t i = 1; i < ring.size(); ++i) {
      const Point2 a = ring[i - 1];
      const Point2 b = ring[i];
      const bool ia = inside(a);
      const bool ib = inside(b);
      if (ia != ib) {
        const int id = snap(circle_crossing(a, b));
        if (ib) {
          current.clear();
          current.push_back(boundary_point(id));
          current_start_ = id;
        } else {
          current.push_back(boundary_point(id));
          arcs.push_back({current, current_start_, id});
          current.clear();
        }
      }
      if (ib) current.push_back(b);
    }
    if (!current.empty()) {
      throw Error(ErrorCode::kTracingInconsistency, "branch ends inside the disk chart");
    }
  }

  Point2 boundary_point(int id) const {
    const auto& z = zeros_[static_cast<std::size_t>(id / 2)];
    return id % 2 == 0 ? Point2{z.u, z.v} : Point2{-z.u, -z.v};
  }

 private:
  static Point2 circle_crossing(Point2 a, Point2 b) {
    // |a + t (b - a)| = 1 with t in [0, 1].
    const Point2 d = b - a;
    const double qa = dot(d, d);
    const double qb = 2.0 * dot(a, d);
    const double qc = dot(a, a) - 1.0;
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    double t = (-qb + std::sqrt(disc)) / (2.0 * qa);
    if (t < 0.0 || t > 1.0) t = (-qb - std::sqrt(disc)) / (2.0 * qa);
    return a + std::clamp(t, 0.0, 1.0) * d;
  }

  int snap(Point2 p) const {
    const double theta = std::atan2(p.y, p.x);
    int best = -1;
    double gap = kSnapAngle;
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
      for (int side = 0; side < 2; ++side) {
        const int id = static_cast<int>(2 * j) + side;
        const Point2 q = boundary_point(id);
        const double g = angle_gap(theta, std::atan2(q.y, q.x));
        if (g <= gap) {
          gap = g;
          best = id;
        }
      }
    }
    if (best < 0) {
      throw Error(ErrorCode::kTracingInconsistency,
                  "traced curve reaches infinity away from every zero of Hess f_n");
    }
    return best;
  }

  const std::vector<ProjectiveZero>& zeros_;
  int current_start_ = -1;
};

Point3 lift(Point2 p, double scale) {
  return normalized(Point3{scale * p.x, scale * p.y, 1.0 - p.x * p.x - p.y * p.y});
}

// Stereographic projection from `pole` onto the plane through the origin
// orthogonal to it.
struct Stereo {
  explicit Stereo(Point3 pole) : c(pole) {
    const Point3 seed = std::abs(c.x) < 0.6 ? Point3{1, 0, 0} : Point3{0, 1, 0};
    e1 = normalized(cross(c, seed));
    e2 = cross(c, e1);
  }
  Point2 operator()(Point3 w) const {
    const double d = std::max(1.0 - dot(w, c), 1e-300);
    return {dot(w, e1) / d, dot(w, e2) / d};
  }
  Point3 c, e1, e2;
};

bool ray_parity(const std::vector<Point2>& poly, Point2 q, double angle) {
  const Point2 dir{std::cos(angle), std::sin(angle)};
  bool inside = false;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const Point2 a = poly[i] - q;
    const Point2 b = poly[i + 1] - q;
    const double ca = cross(dir, a);
    const double cb = cross(dir, b);
    if ((ca > 0.0) == (cb > 0.0)) continue;
    // Intersection of the edge with the ray's line; keep it if ahead of q.
    const double t = ca / (ca - cb);
    const Point2 hit = a + t * (b - a);
    if (dot(hit, dir) > 0.0) inside = !inside;
  }
  return inside;
}

class OvalInterior {
 public:
  explicit OvalInterior(const std::vector<Point3>& lifted) : stereo_(-lifted.front()) {
    poly_.reserve(lifted.size());
    for (const auto& w : lifted) poly_.push_back(stereo_(w));
  }

  bool contains(Point3 w) const { return contains_lift(w) || contains_lift(-w); }

 private:
  bool contains_lift(Point3 w) const {
    const Point2 q = stereo_(w);
    int votes = 0;
    for (double a : kRayAngles) votes += ray_parity(poly_, q, a) ? 1 : 0;
    return votes >= 2;
  }

  Stereo stereo_;
  std::vector<Point2> poly_;
};

int great_circle_parity(const std::vector<Point3>& path, Point3 normal) {
  int changes = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if ((dot(path[i - 1], normal) > 0.0) != (dot(path[i], normal) > 0.0)) ++changes;
  }
  return changes % 2;
}

}  // namespace

double characteristic_length(const BivariatePoly& hess) {
  if (hess.is_zero()) return 1.0;
  const auto parts = homogeneous_decomposition(hess);
  const int top = parts.back().degree;
  const double top_norm = to_double(parts.back().part.max_abs_coefficient());
  double length = 1.0;
  for (const auto& c : parts) {
    if (c.degree == top) continue;
    const double ratio = to_double(c.part.max_abs_coefficient()) / top_norm;
    length = std::max(length, std::pow(ratio, 1.0 / (top - c.degree)));
  }
  return length;
}

BivariatePoly disk_chart_polynomial(const TrivariateHomogeneousPoly& h, const Rational& scale) {
  const BivariatePoly z = BivariatePoly::constant(1) - BivariatePoly::monomial(1, 2, 0) -
                          BivariatePoly::monomial(1, 0, 2);
  std::vector<BivariatePoly> zpow{BivariatePoly::constant(1)};
  for (int k = 1; k <= h.degree(); ++k) zpow.push_back(zpow.back() * z);
  BivariatePoly out;
  for (const auto& [e, c] : h.terms()) {
    const Rational coeff = c * pow(scale, static_cast<unsigned>(e[0] + e[1]));
    out += BivariatePoly::monomial(coeff, e[0], e[1]) * zpow[static_cast<std::size_t>(e[2])];
  }
  return out;
}

CurveTopology projective_topology(const BivariatePoly& f, const TopologyOptions& options) {
  const TrivariateHomogeneousPoly h = projective_hessian(f);
  if (h.is_zero()) {
    throw Error(ErrorCode::kDegenerate, "Hessian vanishes identically");
  }
  const BivariatePoly at_inf = h.at_infinity();
  if (at_inf.is_zero()) {
    throw Error(ErrorCode::kDegenerate, "line at infinity lies on the projective Hessian curve");
  }

  CurveTopology top;
  top.infinity_points = projective_zeros(at_inf);
  for (const auto& z : top.infinity_points) {
    if (z.multiplicity % 2 == 0) {
      throw Error(ErrorCode::kTangentToInfinity,
                  "tangent to line at infinity: Hess f_n has a zero of even multiplicity");
    }
  }
  top.transversal_to_infinity =
      !top.infinity_points.empty() &&
      std::all_of(top.infinity_points.begin(), top.infinity_points.end(),
                  [](const ProjectiveZero& z) { return z.multiplicity == 1; });

  const Rational scale(static_cast<long>(std::ceil(characteristic_length(hessian(f)) * 8.0)), 8);
  top.scale = to_double(scale);
  const BivariatePoly chart = disk_chart_polynomial(h, scale);
  const double step = 2.0 * kChartHalfWidth / std::max(options.grid, 8);
  const auto traced = trace_curve(chart, Box::square(kChartHalfWidth), step);

  Clipper clip(top.infinity_points);
  for (const auto& c : traced) clip.add(c);

  std::map<int, std::pair<std::size_t, bool>> ends;  // id -> (arc, at start)
  for (std::size_t a = 0; a < clip.arcs.size(); ++a) {
    for (const auto& [id, at_start] : {std::pair{clip.arcs[a].start_id, true},
                                       std::pair{clip.arcs[a].end_id, false}}) {
      if (!ends.emplace(id, std::pair{a, at_start}).second) {
        throw Error(ErrorCode::kTracingInconsistency,
                    "two traced branches reach the same point at infinity");
      }
    }
  }
  for (const auto& [id, where] : ends) {
    if (!ends.count(id ^ 1)) {
      throw Error(ErrorCode::kTracingInconsistency,
                  "traced branch at infinity has no antipodal continuation");
    }
  }

  std::vector<CurveComponent> comps;
  std::vector<bool> used(clip.arcs.size(), false);
  for (std::size_t a0 = 0; a0 < clip.arcs.size(); ++a0) {
    if (used[a0]) continue;
    CurveComponent comp;
    comp.chart = "disk";
    comp.closed = true;
    std::size_t a = a0;
    bool forward = true;
    double sgn = 1.0;
    while (true) {
      used[a] = true;
      auto pts = clip.arcs[a].points;
      if (!forward) std::reverse(pts.begin(), pts.end());
      for (const auto& p : pts) {
        comp.points.push_back(p);
        comp.sphere.push_back(sgn * lift(p, top.scale));
      }
      const int exit_id = forward ? clip.arcs[a].end_id : clip.arcs[a].start_id;
      const auto [next, at_start] = ends.at(exit_id ^ 1);
      ++comp.infinity_crossings;
      sgn = -sgn;
      if (next == a0) {
        if (!at_start) {
          throw Error(ErrorCode::kTracingInconsistency, "inconsistent chaining at infinity");
        }
        comp.points.push_back(comp.points.front());
        comp.sphere.push_back(sgn * comp.sphere.front());
        break;
      }
      if (used[next]) {
        throw Error(ErrorCode::kTracingInconsistency, "inconsistent chaining at infinity");
      }
      a = next;
      forward = at_start;
    }
    comp.oval = comp.infinity_crossings % 2 == 0;
    comps.push_back(std::move(comp));
  }
  for (auto& loop : clip.loops) {
    CurveComponent comp;
    comp.chart = "disk";
    comp.closed = true;
    comp.points = std::move(loop);
    for (const auto& p : comp.points) comp.sphere.push_back(lift(p, top.scale));
    comps.push_back(std::move(comp));
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  const auto random_unit = [&] {
    return normalized(Point3{gauss(rng), gauss(rng), gauss(rng)});
  };
  std::array<Point3, 3> normals{random_unit(), random_unit(), random_unit()};
  for (auto& comp : comps) {
    int odd = 0;
    for (const auto& n : normals) odd += great_circle_parity(comp.sphere, n);
    if ((odd >= 2) == comp.oval) ++top.parity_disagreements;
    if (!comp.oval) top.pseudo_line = true;
  }
  if (top.pseudo_line) {
    // H_f has even degree, so every component is two-sided.
    throw Error(ErrorCode::kTracingInconsistency, "traced a pseudo-line on an even-degree curve");
  }

  std::vector<OvalInterior> interiors;
  interiors.reserve(comps.size());
  for (const auto& comp : comps) interiors.emplace_back(comp.sphere);
  for (std::size_t b = 0; b < comps.size(); ++b) {
    const Point3 probe = comps[b].sphere[comps[b].sphere.size() / 2];
    int depth = 0;
    for (std::size_t a = 0; a < comps.size(); ++a) {
      if (a != b && interiors[a].contains(probe)) ++depth;
    }
    comps[b].nesting_depth = depth;
    (depth % 2 == 0 ? top.P : top.N) += 1;
  }
  top.chi_B_plus = top.P - top.N;
  top.chi_B_minus = top.N - top.P + 1;

  int votes = 0;
  for (int s = 0, taken = 0; s < 400 && taken < 33; ++s) {
    const Point3 w = random_unit();
    const double value = h.evaluate(w.x, w.y, w.z);
    if (std::abs(value) <= 1e-9 * h.magnitude(w.x, w.y, w.z)) continue;
    int count = 0;
    for (const auto& in : interiors) count += in.contains(w) ? 1 : 0;
    votes += ((value < 0.0) == (count % 2 == 0)) ? 1 : -1;
    ++taken;
  }
  top.b_minus_class = votes > 0 ? PointClass::kHyperbolic : PointClass::kElliptic;
  top.components = std::move(comps);
  return top;
}

PetrowskyVerdict petrowsky_check(const CurveTopology& top, int degree) {
  if (degree % 2 != 0) {
    throw Error(ErrorCode::kOddDegree, "Petrowsky bounds need an even degree, got " + std::to_string(degree));
  }
  PetrowskyVerdict v;
  v.k = degree / 2;
  v.twice_lower = -3 * v.k * (v.k - 1);
  v.twice_upper = 3 * v.k * (v.k - 1) + 2;
  v.value = top.P - top.N;
  v.pass = 2 * v.value >= v.twice_lower && 2 * v.value <= v.twice_upper;
  return v;
}

}  // namespace parabolica
