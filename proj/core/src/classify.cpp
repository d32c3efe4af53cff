#include "parabolica/classify.hpp"

#include <algorithm>
#include <cmath>

#include "parabolica/errors.hpp"
#include "parabolica/roots.hpp"

namespace parabolica {

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::kElliptic: return "elliptic";
    case PointClass::kParabolic: return "parabolic";
    case PointClass::kHyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string_view to_string(HomogeneousKind k) {
  switch (k) {
    case HomogeneousKind::kHyperbolic: return "hyperbolic";
    case HomogeneousKind::kElliptic: return "elliptic";
    case HomogeneousKind::kNeither: return "neither";
  }
  return "?";
}

namespace {

PointClass from_sign(int s) {
  return s > 0 ? PointClass::kElliptic : s < 0 ? PointClass::kHyperbolic : PointClass::kParabolic;
}

}  // namespace

PointClassification classify_point(const BivariatePoly& f, const Rational& x, const Rational& y) {
  const Rational v = hessian(f)(x, y);
  return {from_sign(sgn(v)), false, to_double(v)};
}

PointClassification classify_point(const BivariatePoly& f, Point2 p, double tolerance) {
  const BivariatePoly h = hessian(f);
  const Rational v = h(exact_rational(p.x), exact_rational(p.y));
  PointClassification out{from_sign(sgn(v)), false, to_double(v)};
  if (v != 0 && std::fabs(out.value) <= tolerance * std::max(h.magnitude(p.x, p.y), 1e-300)) {
    out.cls = PointClass::kParabolic;
    out.numerically_parabolic = true;
  }
  return out;
}

PointClass classify_infinity(const BivariatePoly& f, double u, double v) {
  if (f.degree() < 3) throw Error(ErrorCode::kDegreeTooLow, "degree too low: points at infinity need degree >= 3");
  const BivariatePoly h = hessian(top_part(f));
  if (h.is_zero()) {
    throw Error(ErrorCode::kUnlabelable, "unlabelable at infinity: Hess f_n vanishes identically");
  }
  return from_sign(h.sign_at(exact_rational(u), exact_rational(v)));
}

HomogeneousClass homogeneous_class(const BivariatePoly& h) {
  if (h.is_zero() || !h.is_homogeneous()) throw Error(ErrorCode::kNotHomogeneous, "not homogeneous");
  if (h.degree() < 2) throw Error(ErrorCode::kDegreeTooLow, "degree too low: need degree >= 2");
  const BivariatePoly hh = hessian(h);
  if (hh.is_zero()) return {HomogeneousKind::kNeither, "degenerate"};
  const LinearFactorCount lf = distinct_real_linear_factors(hh);
  if (lf.k > 0) {
    return {HomogeneousKind::kNeither, "Hessian has " + std::to_string(lf.k) + " real linear factor(s)"};
  }
  // No real zeros on the circle, so one sample decides the sign.
  const int s = hh.sign_at(1, 0);
  if (s < 0) return {HomogeneousKind::kHyperbolic, "Hessian negative definite off the origin"};
  return {HomogeneousKind::kElliptic, "Hessian positive definite off the origin"};
}

CompactnessVerdict compactness_verdict(const BivariatePoly& f) {
  if (f.degree() < 3) throw Error(ErrorCode::kDegreeTooLow, "degree too low: compactness needs degree >= 3");
  const BivariatePoly fn = top_part(f);
  const HomogeneousClass cls = homogeneous_class(fn);
  CompactnessVerdict out;
  if (cls.kind == HomogeneousKind::kHyperbolic) {
    return {true, PointClass::kHyperbolic, "f_n is hyperbolic"};
  }
  if (cls.kind == HomogeneousKind::kElliptic) {
    return {true, PointClass::kElliptic, "f_n is elliptic"};
  }
  const BivariatePoly h = hessian(fn);
  if (h.is_zero()) {
    out.reason = "Hess f_n vanishes identically; the line at infinity lies on the projective Hessian curve";
    return out;
  }
  const auto zeros = projective_zeros(h);
  out.hessian_compact = zeros.empty();
  out.reason = zeros.empty() ? "Hess f_n has no real zeros at infinity"
                             : "Hess f_n has " + std::to_string(zeros.size()) + " real zero(s) at infinity";
  return out;
}

}  // namespace parabolica
