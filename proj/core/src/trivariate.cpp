#include "parabolica/trivariate.hpp"

#include <cmath>

#include "parabolica/errors.hpp"

namespace parabolica {

TrivariateHomogeneousPoly::TrivariateHomogeneousPoly(int degree, TermMap terms) : degree_(degree) {
  for (auto& [e, c] : terms) add_term(c, e[0], e[1], e[2]);
}

TrivariateHomogeneousPoly TrivariateHomogeneousPoly::variable(int index) {
  TrivariateHomogeneousPoly p(1);
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  p.add_term(1, e[0], e[1], e[2]);
  return p;
}

Rational TrivariateHomogeneousPoly::coefficient(int i, int j, int k) const {
  auto it = terms_.find({i, j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TrivariateHomogeneousPoly::add_term(const Rational& c, int i, int j, int k) {
  if (c == 0) return;
  if (i < 0 || j < 0 || k < 0 || i + j + k != degree_) {
    throw Error(ErrorCode::kNotHomogeneous, "monomial degree differs from " + std::to_string(degree_));
  }
  auto [it, inserted] = terms_.try_emplace({i, j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TrivariateHomogeneousPoly::operator()(const Rational& x, const Rational& y, const Rational& z) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pow(x, e[0]) * pow(y, e[1]) * pow(z, e[2]);
  return acc;
}

double TrivariateHomogeneousPoly::evaluate(double x, double y, double z) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    acc += to_double(c) * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
  }
  return acc;
}

double TrivariateHomogeneousPoly::magnitude(double x, double y, double z) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    acc += std::fabs(to_double(c)) * std::pow(std::fabs(x), e[0]) * std::pow(std::fabs(y), e[1]) *
           std::pow(std::fabs(z), e[2]);
  }
  return acc;
}

TrivariateHomogeneousPoly TrivariateHomogeneousPoly::derivative(int index) const {
  TrivariateHomogeneousPoly r(std::max(degree_ - 1, 0));
  const auto idx = static_cast<std::size_t>(index);
  for (const auto& [e, c] : terms_) {
    if (e.at(idx) == 0) continue;
    Exponent d = e;
    --d[idx];
    r.add_term(c * e[idx], d[0], d[1], d[2]);
  }
  return r;
}

BivariatePoly TrivariateHomogeneousPoly::at_infinity() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (e[2] == 0) r.add_term(c, e[0], e[1]);
  }
  return r;
}

BivariatePoly TrivariateHomogeneousPoly::dehomogenize() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.add_term(c, e[0], e[1]);
  return r;
}

BivariatePoly TrivariateHomogeneousPoly::chart_u1() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.add_term(c, e[1], e[2]);
  return r;
}

TrivariateHomogeneousPoly& TrivariateHomogeneousPoly::operator+=(const TrivariateHomogeneousPoly& o) {
  if (is_zero() && o.degree_ != degree_) degree_ = o.degree_;
  for (const auto& [e, c] : o.terms_) add_term(c, e[0], e[1], e[2]);
  return *this;
}

TrivariateHomogeneousPoly& TrivariateHomogeneousPoly::operator-=(const TrivariateHomogeneousPoly& o) {
  if (is_zero() && o.degree_ != degree_) degree_ = o.degree_;
  for (const auto& [e, c] : o.terms_) add_term(-c, e[0], e[1], e[2]);
  return *this;
}

TrivariateHomogeneousPoly& TrivariateHomogeneousPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TrivariateHomogeneousPoly operator*(const TrivariateHomogeneousPoly& a, const TrivariateHomogeneousPoly& b) {
  TrivariateHomogeneousPoly r(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
  }
  return r;
}

TrivariateHomogeneousPoly homogenize(const BivariatePoly& p, int degree) {
  if (p.degree() > degree) {
    throw Error(ErrorCode::kInvalidArgument, "cannot homogenize below the polynomial degree");
  }
  TrivariateHomogeneousPoly r(degree);
  for (const auto& [e, c] : p.terms()) r.add_term(c, e.first, e.second, degree - e.first - e.second);
  return r;
}

TrivariateHomogeneousPoly projective_hessian(const BivariatePoly& f) {
  const int n = f.degree();
  if (n < 3) throw Error(ErrorCode::kDegreeTooLow, "degree too low: projective Hessian needs degree >= 3");
  return homogenize(hessian(f), 2 * n - 4);
}

}  // namespace parabolica
