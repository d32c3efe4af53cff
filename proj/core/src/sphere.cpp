#include "parabolica/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "parabolica/classify.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/roots.hpp"
#include "parabolica/text.hpp"

namespace parabolica {

namespace {

using Tri = TrivariateHomogeneousPoly;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInternal, std::string("identity failed: ") + what);
}

struct ChartEvaluator {
  explicit ChartEvaluator(const ChartForm& form)
      : dvdv(form.dvdv), dvdw(form.dvdw), dwdw(form.dwdw) {}

  QuadraticForm operator()(Point2 p) const {
    return {dvdv(p.x, p.y), 0.5 * dvdw(p.x, p.y), dwdw(p.x, p.y)};
  }

  DenseEvaluator dvdv, dvdw, dwdw;
};

// Similarity x -> (x - s y, s x + y), orientation preserving, chosen so the
// vertical direction is not a zero of f_n.
struct Frame {
  Rational s = 0;
  BivariatePoly f;

  Point3 to_frame(Point3 p) const {
    const double sd = to_double(s);
    return normalized(Point3{p.x + sd * p.y, -sd * p.x + p.y, 0.0});
  }
};

Frame choose_frame(const BivariatePoly& f) {
  const int n = f.degree();
  Frame fr{0, f};
  for (int i = 1; top_part(fr.f).coefficient(0, n) == 0; ++i) {
    fr.s = ratio(i, 7);
    fr.f = f.linear_substitute(1, -fr.s, fr.s, 1);
  }
  return fr;
}

std::string factor_text(const ProjectiveZero& z) {
  if (z.vertical) return "x";
  if (z.exact_slope) {
    return to_canonical_string(BivariatePoly::y() - BivariatePoly::monomial(*z.exact_slope, 1, 0));
  }
  std::ostringstream out;
  out.precision(12);
  const double t = z.v / z.u;
  out << "y " << (t < 0 ? "+ " : "- ") << std::abs(t) << "*x";
  return out.str();
}

std::optional<double> pulled_back_angle(const DenseEvaluator& f, int sigma, int label, Point2 chart) {
  const double w = chart.y;
  if (w == 0.0) return std::nullopt;
  const double x = sigma / w;
  const double y = chart.x / w;
  QuadraticForm q;
  f.second_derivatives(x, y, q.a, q.b, q.c);
  if (q.discriminant() <= 0.0) return std::nullopt;
  const auto t = labeled_angle(q, label);
  if (!t) return std::nullopt;
  const double dx = std::cos(*t), dy = std::sin(*t);
  const double dv = -sigma * y / (x * x) * dx + sigma / x * dy;
  const double dw = -sigma / (x * x) * dx;
  return std::atan2(dw, dv);
}

LineFieldIndex safe_index(const std::function<LineFieldIndex()>& run, std::vector<std::string>& flags,
                          const std::string& what) {
  try {
    return run();
  } catch (const Error& e) {
    flags.push_back(what + ": " + e.what());
    LineFieldIndex bad;
    bad.raw = bad.value = std::numeric_limits<double>::quiet_NaN();
    return bad;
  }
}

}  // namespace

EdlaForm edla(const BivariatePoly& f) {
  const int n = f.degree();
  if (n < 3) throw Error(ErrorCode::kDegreeTooLow, "degree too low: the sphere extension needs n >= 3");
  EdlaForm e;
  e.n = n;
  e.F = homogenize(f, n);
  const Tri u = Tri::variable(0), v = Tri::variable(1);
  e.Fuu = e.F.derivative(0).derivative(0);
  e.Fuv = e.F.derivative(0).derivative(1);
  e.Fvv = e.F.derivative(1).derivative(1);
  e.A = (u * e.Fuu + v * e.Fuv) * Rational(-1);
  e.B = (u * e.Fuv + v * e.Fvv) * Rational(-1);
  e.S = u * u * e.Fuu + u * v * e.Fuv * Rational(2) + v * v * e.Fvv;
  e.H = e.Fuu * e.Fvv - e.Fuv * e.Fuv;

  Tri lemma(n);
  for (const auto& c : homogeneous_decomposition(f)) {
    if (c.degree >= 2) lemma += homogenize(c.part * Rational(c.degree * (c.degree - 1)), n);
  }
  require(lemma == e.S, "S = sum k(k-1) w^(n-k) f_k");
  require(e.S.at_infinity() == top_part(f) * Rational(n * (n - 1)), "S(u, v, 0) = n(n-1) f_n");
  Tri euler = u * e.A + v * e.B + e.S;
  require(euler.is_zero(), "u A + v B + S = 0");
  require(e.H == projective_hessian(f), "F_uu F_vv - F_uv^2 = H_f");
  return e;
}

BivariatePoly chart_restriction(const TrivariateHomogeneousPoly& p, int sigma) {
  BivariatePoly out;
  for (const auto& [e, c] : p.terms()) {
    const Rational s = (sigma < 0 && e[0] % 2 == 1) ? Rational(-c) : c;
    out.add_term(s, e[1], e[2]);
  }
  return out;
}

BivariatePoly ChartForm::discriminant() const {
  const BivariatePoly half = dvdw * Rational(1, 2);
  return half * half - dvdv * dwdw;
}

ChartForm chart_form(const EdlaForm& e, int sigma) {
  if (sigma != 1 && sigma != -1) throw Error(ErrorCode::kInvalidArgument, "chart sign must be +1 or -1");
  ChartForm c;
  c.sigma = sigma;
  const BivariatePoly w = BivariatePoly::y();
  c.dvdv = w * w * chart_restriction(e.Fvv, sigma);
  c.dvdw = w * chart_restriction(e.B, sigma) * Rational(2);
  c.dwdw = chart_restriction(e.S, sigma);
  require(c.discriminant() == -(w * w * chart_restriction(e.H, sigma)), "discriminant = -w^2 H_f");
  return c;
}

AppendixLinearization appendix_linearization(const BivariatePoly& f, Point3 p) {
  const int n = f.degree();
  const BivariatePoly fn = top_part(f);
  const auto zeros = projective_zeros(fn);
  const ProjectiveZero* zero = nullptr;
  double best = 1e-6;
  for (const auto& z : zeros) {
    const double d = std::abs(z.u * p.y - z.v * p.x);
    if (d < best) {
      best = d;
      zero = &z;
    }
  }
  if (!zero) throw Error(ErrorCode::kInvalidArgument, "point is not a zero of f_n on the equator");

  // Columns of the change of coordinates: e1 -> p, e2 -> p rotated by 90 degrees.
  AppendixLinearization out;
  Rational a, b, c, d;
  if (zero->vertical) {
    const Rational s = p.y > 0 ? 1 : -1;
    a = 0, c = s, b = -s, d = 0;
    out.exact = true;
  } else if (zero->exact_slope) {
    const Rational s = p.x > 0 ? 1 : -1;
    const Rational& t = *zero->exact_slope;
    a = s, c = s * t, b = -s * t, d = s;
    out.exact = true;
  } else {
    a = exact_rational(p.x), c = exact_rational(p.y), b = -c, d = a;
  }
  const BivariatePoly g = f.linear_substitute(a, b, c, d);
  const BivariatePoly gn = top_part(g);
  const UnivariatePoly slice = gn.dehomogenize_x();

  double vstar = 0.0;
  if (out.exact) {
    require(slice.coefficient(0) == 0, "f_n vanishes at the normalized point");
    out.a = to_double(gn.coefficient(n - 1, 1));
  } else {
    const Rational w(1, 100000000);
    const auto roots = real_roots(slice, RationalInterval{-w, w});
    if (roots.empty()) throw Error(ErrorCode::kInternal, "normalized zero of f_n not found");
    vstar = roots.roots.front().value;
    out.a = slice.derivative().evaluate(vstar);
  }
  if (out.a == 0.0 || (!out.exact && std::abs(out.a) < 1e-12 * to_double(gn.max_abs_coefficient()))) {
    throw Error(ErrorCode::kRepeatedFactor, "repeated factor: a_{n-1,1} vanishes");
  }

  const EdlaForm e = edla(g);
  const double B0 = e.B.evaluate(1, vstar, 0);
  const double H0 = e.H.evaluate(1, vstar, 0);
  const double Sv = e.S.derivative(1).evaluate(1, vstar, 0);
  const double Sw = e.S.derivative(2).evaluate(1, vstar, 0);
  const double root = std::sqrt(std::max(0.0, -H0));
  const double T1 = -2.0 * B0 - 2.0 * root;
  const double T2 = -2.0 * B0 + 2.0 * root;
  out.DY1 = {{{2.0 * Sv, 2.0 * Sw}, {0.0, T1}}};
  out.DY2 = {{{2.0 * Sv, 2.0 * Sw}, {0.0, T2}}};
  out.eigen1 = {2.0 * Sv, T1};
  out.eigen2 = {2.0 * Sv, T2};
  const double scale = std::abs(Sv) + std::abs(B0) + root;
  const auto node = [&](double l1, double l2) {
    return std::abs(l1) > 1e-9 * scale && std::abs(l2) > 1e-9 * scale && (l1 > 0) == (l2 > 0);
  };
  const bool n1 = node(out.eigen1[0], out.eigen1[1]);
  const bool n2 = node(out.eigen2[0], out.eigen2[1]);
  out.node_field = n1 == n2 ? 0 : (n1 ? 1 : 2);
  out.expected_node_field = out.a > 0 ? 2 : 1;

  bool exact_ok = true;
  if (out.exact) {
    const Rational ra = gn.coefficient(n - 1, 1);
    const Rational nm1(n - 1);
    exact_ok = e.B(1, 0, 0) == -nm1 * ra && -e.H(1, 0, 0) == nm1 * nm1 * ra * ra && e.S(1, 0, 0) == 0;
    // T1 T2 = 4 (B^2 + H_f) = 4 S F_vv on the whole chart.
    const BivariatePoly Bc = chart_restriction(e.B, 1);
    exact_ok = exact_ok && (Bc * Bc + chart_restriction(e.H, 1) ==
                            chart_restriction(e.S, 1) * chart_restriction(e.Fvv, 1));
  }
  double residual = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double t = 2.0 * std::numbers::pi * (i + 0.5) / 16;
    const double vv = vstar + 1e-3 * std::cos(t), ww = 1e-3 * std::sin(t);
    const double B = e.B.evaluate(1, vv, ww), H = e.H.evaluate(1, vv, ww);
    const double r = std::sqrt(std::max(0.0, -H));
    const double lhs = (-2.0 * B - 2.0 * r) * (-2.0 * B + 2.0 * r);
    const double rhs = 4.0 * e.S.evaluate(1, vv, ww) * e.Fvv.evaluate(1, vv, ww);
    const double mag = 4.0 * (B * B + std::abs(H)) + 1e-300;
    residual = std::max(residual, std::abs(lhs - rhs) / mag);
  }
  out.identity_residual = residual;
  out.identity_holds = exact_ok && residual < 1e-9;
  out.pass = out.identity_holds && out.node_field == out.expected_node_field;
  return out;
}

namespace {

ProjectiveIndex projective_index_in_frame(const BivariatePoly& frame_f, int n, Point3 frame_p,
                                          double radius, std::vector<std::string>& flags) {
  const DenseEvaluator ev(frame_f);
  const int sigma = frame_p.x > 0 ? 1 : -1;
  const Point2 center{frame_p.y / std::abs(frame_p.x), 0.0};
  ProjectiveIndex out;
  out.rule = n % 2 == 1 ? 0.5 : 1.0;
  for (int label : {1, 2}) {
    const AngleField field = [&, label](Point2 c) { return pulled_back_angle(ev, sigma, label, c); };
    (label == 1 ? out.x1 : out.x2) = safe_index(
        [&] { return line_field_index(field, center, radius, 512, 0.5); }, flags,
        "projective index of X_" + std::to_string(label));
  }
  if (n % 2 == 1) {
    out.consistent = out.x1.value == 0.5 && out.x2.value == 0.5;
  } else {
    out.consistent = (out.x1.value == 1.0 && out.x2.value == 0.0) ||
                     (out.x1.value == 0.0 && out.x2.value == 1.0);
  }
  return out;
}

}  // namespace

ProjectiveIndex projective_index(const BivariatePoly& f, Point3 p) {
  const Frame fr = choose_frame(f);
  std::vector<std::string> flags;
  auto out = projective_index_in_frame(fr.f, f.degree(), fr.to_frame(p), 0.05, flags);
  return out;
}

double InfinityAnalysis::sum_index_Y1() const {
  double s = 0.0;
  for (const auto& p : points) s += p.index_Y1.value;
  return s;
}

double InfinityAnalysis::sum_index_Y2() const {
  double s = 0.0;
  for (const auto& p : points) s += p.index_Y2.value;
  return s;
}

double InfinityAnalysis::sum_projective(int label) const {
  double s = 0.0;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    s += label == 1 ? points[i].projective.x1.value : points[i].projective.x2.value;
  }
  return s;
}

InfinityAnalysis singular_points_at_infinity(const BivariatePoly& f) {
  const int n = f.degree();
  if (n < 3) throw Error(ErrorCode::kDegreeTooLow, "degree too low: points at infinity need n >= 3");
  InfinityAnalysis out;
  const auto zeros = projective_zeros(top_part(f));
  out.k = static_cast<int>(zeros.size());
  for (const auto& z : zeros) {
    if (z.multiplicity != 1) out.squarefree = false;
  }
  if (!out.squarefree) out.flags.push_back("f_n has a repeated factor");
  if (zeros.empty()) return out;

  const Frame fr = choose_frame(f);
  const EdlaForm e = edla(fr.f);
  const ChartForm plus = chart_form(e, 1), minus = chart_form(e, -1);
  const ChartEvaluator eval_plus(plus), eval_minus(minus);

  std::vector<Point3> frame_points;
  for (const auto& z : zeros) {
    for (double s : {1.0, -1.0}) {
      InfinitySingularPoint sp;
      sp.equator_point = {s * z.u, s * z.v, 0.0};
      sp.linear_factor = factor_text(z);
      sp.multiplicity = z.multiplicity;
      sp.antipode = out.points.size() + (s > 0 ? 1 : -1);
      out.points.push_back(sp);
      frame_points.push_back(fr.to_frame(sp.equator_point));
    }
  }
  const auto center_of = [](Point3 q) { return Point2{q.y / std::abs(q.x), 0.0}; };
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    auto& sp = out.points[i];
    const Point3 q = frame_points[i];
    const int sigma = q.x > 0 ? 1 : -1;
    const Point2 center = center_of(q);
    double radius = 0.05;
    for (std::size_t j = 0; j < frame_points.size(); ++j) {
      if (j == i || (frame_points[j].x > 0) != (q.x > 0)) continue;
      radius = std::min(radius, 0.3 * distance(center, center_of(frame_points[j])));
    }
    const ChartEvaluator& ev = sigma > 0 ? eval_plus : eval_minus;
    const FormField field = [&ev](Point2 c) { return ev(c); };
    const std::string where = " at (" + std::to_string(sp.equator_point.x) + ", " +
                              std::to_string(sp.equator_point.y) + ", 0)";
    sp.index_Y1 = safe_index([&] { return line_field_index(field, center, FieldChoice::kLabel1, radius); },
                             out.flags, "index of Y_1" + where);
    sp.index_Y2 = safe_index([&] { return line_field_index(field, center, FieldChoice::kLabel2, radius); },
                             out.flags, "index of Y_2" + where);
    sp.projective = projective_index_in_frame(fr.f, n, q, radius, out.flags);
    if (!sp.projective.consistent) out.flags.push_back("projective index off the parity rule" + where);
    try {
      sp.linearization = appendix_linearization(f, sp.equator_point);
      sp.a_coeff = sp.linearization.a;
      if (!sp.linearization.pass) out.flags.push_back("linearization check failed" + where);
    } catch (const Error& err) {
      out.flags.push_back(std::string("linearization") + where + ": " + err.what());
    }
  }
  return out;
}

ArnoldIndex arnold_index(const BivariatePoly& h) {
  const HomogeneousClass cls = homogeneous_class(h);
  if (cls.kind == HomogeneousKind::kNeither) {
    throw Error(ErrorCode::kInvalidArgument, "Arnold index needs a hyperbolic or elliptic polynomial");
  }
  ArnoldIndex out;
  out.zeros = 2 * static_cast<int>(projective_zeros(h).size());
  out.formula = ratio(4 - out.zeros, 4);
  // An elliptic h has no real asymptotic directions off the origin.
  if (cls.kind == HomogeneousKind::kElliptic) return out;
  const DenseEvaluator ev(h);
  const FormField field = [&ev](Point2 p) {
    QuadraticForm q;
    ev.second_derivatives(p.x, p.y, q.a, q.b, q.c);
    return q;
  };
  out.winding = line_field_index(field, Point2{0.0, 0.0}, FieldChoice::kLabel1, 1.0, 512);
  out.agrees = std::abs(out.winding->raw - to_double(out.formula)) <= 0.05;
  return out;
}

std::vector<Point2> integrate_chart_field(const ChartForm& form, Point2 start, int label, double step,
                                          int steps) {
  const ChartEvaluator ev(form);
  const auto pick = [&](Point2 p, Point2 prev) -> std::optional<Point2> {
    const QuadraticForm q = ev(p);
    std::optional<Point2> best;
    double best_dot = -2.0;
    for (int l : {1, 2}) {
      const auto t = labeled_angle(q, l);
      if (!t) continue;
      Point2 d{std::cos(*t), std::sin(*t)};
      if (dot(d, prev) < 0.0) d = -1.0 * d;
      if (dot(d, prev) > best_dot) {
        best_dot = dot(d, prev);
        best = d;
      }
    }
    return best;
  };
  std::vector<Point2> out{start};
  const auto t0 = labeled_angle(ev(start), label);
  if (!t0) return out;
  Point2 d{std::cos(*t0), std::sin(*t0)};
  Point2 p = start;
  for (int i = 0; i < steps; ++i) {
    const auto dm = pick(p + 0.5 * step * d, d);
    if (!dm) break;
    p = p + step * *dm;
    const auto dn = pick(p, *dm);
    out.push_back(p);
    if (!dn) break;
    d = *dn;
  }
  return out;
}

}  // namespace parabolica
