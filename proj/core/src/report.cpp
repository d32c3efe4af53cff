#include "parabolica/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "parabolica/errors.hpp"
#include "parabolica/system.hpp"
#include "parabolica/text.hpp"

namespace parabolica {

namespace {

template <class T>
std::optional<T> stage(StructureReport& r, const std::string& name, const std::function<T()>& run) {
  try {
    return run();
  } catch (const Error& e) {
    r.refusals.push_back({name, std::string(error_code_name(e.code())), e.what()});
    return std::nullopt;
  }
}

std::string first_refusal(const StructureReport& r, const std::string& stage_name) {
  for (const auto& s : r.refusals) {
    if (s.stage == stage_name) return s.reason;
  }
  return stage_name + " unavailable";
}

// Points where f_xx = f_xy = f_yy = 0. Empty optional when undecided.
std::optional<bool> has_affine_flat_point(const BivariatePoly& f) {
  std::vector<BivariatePoly> parts{f.dx().dx(), f.dx().dy(), f.dy().dy()};
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const BivariatePoly& p) { return p.is_zero(); }),
              parts.end());
  if (parts.empty()) return true;
  if (parts.size() == 1) {
    return parts[0].is_constant() ? false : std::optional<bool>{};
  }
  try {
    for (const Point2 p : solve_system(parts[0], parts[1]).points) {
      if (parts.size() < 3) return true;
      const double v = std::abs(parts[2].evaluate(p.x, p.y));
      if (v <= 1e-9 * std::max(1.0, parts[2].magnitude(p.x, p.y))) return true;
    }
    return false;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Point2 disk_to_affine(Point2 p, double scale) {
  const double d = 1.0 - p.x * p.x - p.y * p.y;
  return {scale * p.x / d, scale * p.y / d};
}

BoundCheck make_bound(const std::string& name, const std::string& formula) {
  BoundCheck b;
  b.name = name;
  b.formula = formula;
  return b;
}

double cross3(Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); }

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len2 = dot(d, d);
  const double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + t * d);
}

}  // namespace

double convex_hull_deviation(const std::vector<Point2>& points) {
  std::vector<Point2> pts = points;
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0.0;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross3(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross3(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k);
  double worst = 0.0;
  for (const auto& p : points) {
    double best = INFINITY;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) best = std::min(best, segment_distance(p, hull[i], hull[i + 1]));
    worst = std::max(worst, best);
  }
  return worst;
}

bool StructureReport::refused(const std::string& stage_name) const {
  return std::any_of(refusals.begin(), refusals.end(), [&](const StageFailure& s) { return s.stage == stage_name; });
}

bool StructureReport::verified() const {
  if (identity.evaluated && !identity.pass) return false;
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return !b.applicable || b.pass; });
}

std::vector<BoundCheck> bound_checks(const BivariatePoly& f, const StructureReport& r) {
  std::vector<BoundCheck> out;
  const int n = f.degree();
  if (n < 3) return out;
  const int k = r.infinity ? r.infinity->k : 0;

  BoundCheck godron = make_bound("godron_count", "(n-2)(5n-12)");
  godron.upper = Rational((n - 2) * (5 * n - 12));
  if (r.godrons) {
    godron.measured = static_cast<double>(r.godrons->godrons.size());
    godron.pass = godron.measured <= to_double(godron.upper);
  } else {
    godron.applicable = false;
    godron.note = "hypotheses not met: " + first_refusal(r, "godrons");
  }
  out.push_back(godron);

  const int base = (n - 2) * (8 * n - 21);
  BoundCheck pi = make_bound("interior_godrons", "((n-2)(8n-21)+k)/2");
  pi.upper = ratio(base + k, 2);
  BoundCheck pe = make_bound("exterior_godrons", "1+((n-2)(8n-21)-k)/2");
  pe.upper = ratio(base - k + 2, 2);
  const bool tangency_ok = r.topology && r.godrons && r.infinity;
  for (BoundCheck* b : {&pi, &pe}) {
    if (tangency_ok) {
      b->measured = b == &pi ? r.P_i : r.P_e;
      b->pass = b->measured <= to_double(b->upper);
    } else {
      b->applicable = false;
      b->note = "hypotheses not met: " + first_refusal(r, r.topology ? (r.godrons ? "infinity" : "godrons") : "topology");
    }
    out.push_back(*b);
  }

  BoundCheck pet = make_bound("petrowsky", "-(3/2)k(k-1) <= P-N <= (3/2)k(k-1)+1, 2k = 2n-4");
  if (r.petrowsky) {
    pet.lower = ratio(r.petrowsky->twice_lower, 2);
    pet.upper = ratio(r.petrowsky->twice_upper, 2);
    pet.measured = r.petrowsky->value;
    pet.pass = r.petrowsky->pass;
  } else {
    pet.applicable = false;
    pet.note = "hypotheses not met: " + first_refusal(r, "topology");
  }
  out.push_back(pet);

  BoundCheck sum = make_bound("index_sum_Y", "");
  sum.lower = Rational(0);
  if (r.topology && r.infinity && r.infinity->squarefree) {
    if (r.topology->infinity_points.empty()) {
      sum.formula = "0 <= sum Ind(Y_k) <= n";
      sum.upper = Rational(n);
    } else if (r.topology->transversal_to_infinity) {
      sum.formula = "0 <= sum Ind(Y_k) <= n-2";
      sum.upper = Rational(n - 2);
    } else {
      sum.applicable = false;
      sum.note = "hypotheses not met: Hessian curve meets infinity non-transversally";
    }
    if (sum.applicable) {
      sum.measured = r.infinity->sum_index_Y1();
      const double m2 = r.infinity->sum_index_Y2();
      sum.pass = std::isfinite(sum.measured) && std::isfinite(m2) && sum.measured >= 0.0 && m2 >= 0.0 &&
                 sum.measured <= to_double(sum.upper) && m2 <= to_double(sum.upper);
    }
  } else {
    sum.formula = "0 <= sum Ind(Y_k) <= n or n-2";
    sum.applicable = false;
    sum.note = r.infinity && !r.infinity->squarefree ? "hypotheses not met: f_n has a repeated factor"
                                                     : "hypotheses not met: " + first_refusal(r, "topology");
  }
  out.push_back(sum);

  BoundCheck convex = make_bound("convex_ovals", "3(n-2)(n-3)+k");
  convex.upper = Rational(3 * (n - 2) * (n - 3) + k);
  std::string why;
  if (!r.topology || !r.godrons) {
    why = first_refusal(r, r.topology ? "godrons" : "topology");
  } else if (r.topology->b_minus_class != PointClass::kHyperbolic) {
    why = "H is not contained in B-";
  } else {
    for (const auto& c : r.topology->components) {
      if (c.nesting_depth != 0) {
        why = "an oval is not exterior";
        break;
      }
      if (c.infinity_crossings != 0) {
        why = "an oval passes through infinity";
        break;
      }
      std::vector<Point2> affine;
      affine.reserve(c.points.size());
      for (const auto& p : c.points) affine.push_back(disk_to_affine(p, r.topology->scale));
      double diameter = 0.0;
      for (const auto& p : affine) diameter = std::max(diameter, distance(p, affine.front()));
      if (convex_hull_deviation(affine) >= 1e-3 * diameter) {
        why = "an oval is not convex";
        break;
      }
    }
  }
  if (why.empty()) {
    convex.measured = static_cast<double>(r.godrons->godrons.size());
    convex.pass = convex.measured <= to_double(convex.upper);
  } else {
    convex.applicable = false;
    convex.note = "hypotheses not met: " + why;
  }
  out.push_back(convex);
  return out;
}

StructureReport full_report(const BivariatePoly& f, const ReportOptions& options) {
  StructureReport r;
  r.input = to_canonical_string(f);
  r.hessian = to_canonical_string(hessian(f));
  r.degree = f.degree();
  r.seed = options.topology.seed;

  r.compactness = stage<CompactnessVerdict>(r, "compactness", [&] { return compactness_verdict(f); });
  r.topology = stage<CurveTopology>(r, "topology", [&] { return projective_topology(f, options.topology); });
  if (r.topology) {
    r.petrowsky = stage<PetrowskyVerdict>(r, "petrowsky", [&] { return petrowsky_check(*r.topology, 2 * r.degree - 4); });
    if (r.petrowsky && !r.petrowsky->pass) r.warnings.push_back("Petrowsky inequality violated: tracing is suspect");
    if (r.topology->parity_disagreements > 0) r.warnings.push_back("oval parity test disagrees with chart count");
  }
  r.godrons = stage<GodronSearch>(r, "godrons", [&] { return find_godrons(f, options.godron_box); });
  if (r.godrons) {
    r.P_i = r.godrons->interior();
    r.P_e = r.godrons->exterior();
    r.warnings.insert(r.warnings.end(), r.godrons->warnings.begin(), r.godrons->warnings.end());
    r.warnings.insert(r.warnings.end(), r.godrons->errors.begin(), r.godrons->errors.end());
  }
  r.infinity = stage<InfinityAnalysis>(r, "infinity", [&] { return singular_points_at_infinity(f); });
  if (r.infinity) {
    r.index_sum = r.infinity->sum_index_Y1();
    r.warnings.insert(r.warnings.end(), r.infinity->flags.begin(), r.infinity->flags.end());
  }

  IdentityCheck& id = r.identity;
  if (r.degree < 3) {
    id.refusal = "degree n >= 3";
  } else if (!r.topology) {
    id.refusal = first_refusal(r, "topology");
  } else if (!r.godrons) {
    id.refusal = first_refusal(r, "godrons");
  } else if (!r.infinity) {
    id.refusal = first_refusal(r, "infinity");
  } else if (!r.infinity->squarefree) {
    id.refusal = "f_n has no repeated factors";
  } else if (!r.godrons->errors.empty()) {
    id.refusal = "S_f generic: degenerate godron";
  } else if (const auto flat = has_affine_flat_point(f); !flat || *flat) {
    id.refusal = flat ? "S_f generic: flat point" : "S_f generic: flat points undecided";
  } else if (r.topology->b_minus_class != PointClass::kHyperbolic && r.topology->oval_count() == 0) {
    id.refusal = "field domain empty";
  } else {
    const bool minus = r.topology->b_minus_class == PointClass::kHyperbolic;
    id.epsilon = minus ? "-" : "+";
    id.chi = minus ? r.topology->chi_B_minus : r.topology->chi_B_plus;
    id.lhs = r.infinity->sum_projective(1);
    id.rhs = id.chi + (r.P_i - r.P_e) / 2.0;
    if (!std::isfinite(id.lhs)) {
      id.refusal = "index computation failed";
    } else {
      id.evaluated = true;
      id.pass = std::abs(id.lhs - id.rhs) < 1e-6;
    }
  }
  if (!id.evaluated) r.refusals.push_back({"identity", "refused", id.refusal});
  r.bounds = bound_checks(f, r);
  return r;
}

IdentityCheck verify_index_identity(const BivariatePoly& f, const ReportOptions& options) {
  return full_report(f, options).identity;
}

}  // namespace parabolica
