#include "parabolica/univariate.hpp"

#include <algorithm>

#include "parabolica/errors.hpp"

namespace parabolica {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UnivariatePoly::UnivariatePoly(std::initializer_list<Rational> coefficients)
    : UnivariatePoly(std::vector<Rational>(coefficients)) {}

UnivariatePoly UnivariatePoly::constant(const Rational& c) { return UnivariatePoly({c}); }

UnivariatePoly UnivariatePoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UnivariatePoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UnivariatePoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

int UnivariatePoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

UnivariatePoly UnivariatePoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return {};
  UnivariatePoly r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UnivariatePoly UnivariatePoly::taylor_shift(const Rational& shift) const {
  // Horner-style synthetic division, O(d^2).
  std::vector<Rational> c = coeffs_;
  const int n = degree();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) c[j] += shift * c[j + 1];
  }
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& scale) const {
  std::vector<Rational> c = coeffs_;
  Rational s = 1;
  for (auto& v : c) {
    v *= s;
    s *= scale;
  }
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::reversed() const {
  std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
  return UnivariatePoly(std::move(c));
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(std::move(c));
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePoly{}, a};
  std::vector<Rational> r = a.coefficients();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[i] / lb;
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coefficients()[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(r))};
}

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    UnivariatePoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();  // keeps coefficient growth in check
  }
  return a.monic();
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
  if (p.degree() < 1) return p.monic();
  UnivariatePoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<UnivariatePoly> squarefree_decomposition(const UnivariatePoly& p) {
  std::vector<UnivariatePoly> out;
  if (p.degree() < 1) return out;
  UnivariatePoly dp = p.derivative();
  UnivariatePoly a = gcd(p, dp);
  UnivariatePoly b = divmod(p, a).first;
  UnivariatePoly c = divmod(dp, a).first;
  UnivariatePoly d = c - b.derivative();
  while (b.degree() >= 1) {
    a = gcd(b, d);
    out.push_back(a.monic());
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

std::vector<Integer> primitive_integer_coefficients(const UnivariatePoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0 && g != 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

Rational cauchy_bound(const UnivariatePoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficient(i) / p.leading())));
  return m + 1;
}

}  // namespace parabolica
