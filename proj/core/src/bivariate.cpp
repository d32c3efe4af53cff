#include "parabolica/bivariate.hpp"

#include <algorithm>
#include <cmath>

#include "parabolica/errors.hpp"

namespace parabolica {

BivariatePoly::BivariatePoly(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  recompute_degree();
}

BivariatePoly BivariatePoly::constant(const Rational& c) { return monomial(c, 0, 0); }
BivariatePoly BivariatePoly::x() { return monomial(1, 1, 0); }
BivariatePoly BivariatePoly::y() { return monomial(1, 0, 1); }

BivariatePoly BivariatePoly::monomial(const Rational& c, int i, int j) {
  BivariatePoly p;
  p.add_term(c, i, j);
  return p;
}

void BivariatePoly::recompute_degree() {
  degree_ = -1;
  for (const auto& [e, c] : terms_) degree_ = std::max(degree_, e.first + e.second);
}

bool BivariatePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

int BivariatePoly::degree_in_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivariatePoly::degree_in_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

bool BivariatePoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.first + t.first.second == degree_; });
}

Rational BivariatePoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Rational& c, int i, int j) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
      recompute_degree();
      return;
    }
  }
  degree_ = std::max(degree_, i + j);
}

Rational BivariatePoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pow(x, e.first) * pow(y, e.second);
  return acc;
}

double BivariatePoly::evaluate(double x, double y) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += to_double(c) * std::pow(x, e.first) * std::pow(y, e.second);
  return acc;
}

int BivariatePoly::sign_at(const Rational& x, const Rational& y) const { return sgn((*this)(x, y)); }

BivariatePoly BivariatePoly::dx() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) r.add_term(c * e.first, e.first - 1, e.second);
  }
  return r;
}

BivariatePoly BivariatePoly::dy() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) r.add_term(c * e.second, e.first, e.second - 1);
  }
  return r;
}

BivariatePoly BivariatePoly::homogeneous_part(int d) const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second == d) r.add_term(c, e.first, e.second);
  }
  return r;
}

UnivariatePoly BivariatePoly::restrict_x(const Rational& x0) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in_y(), 0) + 1));
  for (const auto& [e, v] : terms_) c[e.second] += v * pow(x0, e.first);
  return UnivariatePoly(std::move(c));
}

UnivariatePoly BivariatePoly::restrict_y(const Rational& y0) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in_x(), 0) + 1));
  for (const auto& [e, v] : terms_) c[e.first] += v * pow(y0, e.second);
  return UnivariatePoly(std::move(c));
}

UnivariatePoly BivariatePoly::dehomogenize_x() const { return restrict_x(1); }

BivariatePoly BivariatePoly::linear_substitute(const Rational& a, const Rational& b, const Rational& c,
                                               const Rational& d) const {
  const BivariatePoly X = monomial(a, 1, 0) + monomial(b, 0, 1);
  const BivariatePoly Y = monomial(c, 1, 0) + monomial(d, 0, 1);
  // Cache powers; degrees are small.
  std::vector<BivariatePoly> xp{constant(1)}, yp{constant(1)};
  for (int i = 1; i <= std::max(degree_in_x(), 0); ++i) xp.push_back(xp.back() * X);
  for (int j = 1; j <= std::max(degree_in_y(), 0); ++j) yp.push_back(yp.back() * Y);
  BivariatePoly r;
  for (const auto& [e, v] : terms_) r += v * (xp[e.first] * yp[e.second]);
  return r;
}

std::vector<UnivariatePoly> BivariatePoly::coefficients_in_y() const {
  const int dy_ = degree_in_y();
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(std::max(dy_, 0) + 1),
                                       std::vector<Rational>(static_cast<std::size_t>(std::max(degree_in_x(), 0) + 1)));
  for (const auto& [e, v] : terms_) c[e.second][e.first] = v;
  std::vector<UnivariatePoly> out;
  if (dy_ < 0) return out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

BivariatePoly BivariatePoly::swapped() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.add_term(c, e.second, e.first);
  return r;
}

double BivariatePoly::magnitude(double x, double y) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    acc += std::fabs(to_double(c)) * std::pow(std::fabs(x), e.first) * std::pow(std::fabs(y), e.second);
  }
  return acc;
}

Rational BivariatePoly::max_abs_coefficient() const {
  Rational m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, abs(c));
  return m;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  recompute_degree();
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) { return *this += -o; }

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    degree_ = -1;
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly::TermMap t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) t[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  return BivariatePoly(std::move(t));
}

BivariatePoly pow(const BivariatePoly& p, unsigned exponent) {
  BivariatePoly r = BivariatePoly::constant(1);
  BivariatePoly b = p;
  while (exponent > 0) {
    if (exponent & 1U) r = r * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return r;
}

std::vector<HomogeneousComponent> homogeneous_decomposition(const BivariatePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "zero input: cannot decompose the zero polynomial");
  std::map<int, BivariatePoly> parts;
  for (const auto& [e, c] : f.terms()) parts[e.first + e.second].add_term(c, e.first, e.second);
  std::vector<HomogeneousComponent> out;
  for (auto& [d, p] : parts) out.push_back({d, std::move(p)});
  return out;
}

BivariatePoly hessian(const BivariatePoly& f) {
  const BivariatePoly fx = f.dx(), fy = f.dy();
  const BivariatePoly fxy = fx.dy();
  return fx.dx() * fy.dy() - fxy * fxy;
}

BivariatePoly top_part(const BivariatePoly& f) { return f.homogeneous_part(f.degree()); }

namespace {

// Powers 1, t, t^2, ... up to d.
inline void powers(double t, int d, double* out) {
  out[0] = 1.0;
  for (int i = 1; i <= d; ++i) out[i] = out[i - 1] * t;
}

constexpr int kMaxDegree = 64;

}  // namespace

DenseEvaluator::DenseEvaluator(const BivariatePoly& p) : degree_(std::max(p.degree(), 0)) {
  if (degree_ > kMaxDegree) throw Error(ErrorCode::kInvalidArgument, "degree too high for evaluation");
  const int w = degree_ + 1;
  c_.assign(static_cast<std::size_t>(w * w), 0.0);
  for (const auto& [e, v] : p.terms()) c_[e.first * w + e.second] = to_double(v);
}

double DenseEvaluator::operator()(double x, double y) const {
  if (c_.empty()) return 0.0;
  const int w = degree_ + 1;
  double yp[kMaxDegree + 1];
  powers(y, degree_, yp);
  double acc = 0.0;
  for (int i = degree_; i >= 0; --i) {
    double row = 0.0;
    for (int j = 0; j + i <= degree_; ++j) row += c_[i * w + j] * yp[j];
    acc = acc * x + row;
  }
  return acc;
}

Point2 DenseEvaluator::gradient(double x, double y) const {
  if (c_.empty()) return {};
  const int w = degree_ + 1;
  double xp[kMaxDegree + 1], yp[kMaxDegree + 1];
  powers(x, degree_, xp);
  powers(y, degree_, yp);
  Point2 g;
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      const double c = c_[i * w + j];
      if (c == 0.0) continue;
      if (i > 0) g.x += c * i * xp[i - 1] * yp[j];
      if (j > 0) g.y += c * j * xp[i] * yp[j - 1];
    }
  }
  return g;
}

void DenseEvaluator::second_derivatives(double x, double y, double& fxx, double& fxy, double& fyy) const {
  fxx = fxy = fyy = 0.0;
  if (c_.empty()) return;
  const int w = degree_ + 1;
  double xp[kMaxDegree + 1], yp[kMaxDegree + 1];
  powers(x, degree_, xp);
  powers(y, degree_, yp);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      const double c = c_[i * w + j];
      if (c == 0.0) continue;
      if (i > 1) fxx += c * i * (i - 1) * xp[i - 2] * yp[j];
      if (i > 0 && j > 0) fxy += c * i * j * xp[i - 1] * yp[j - 1];
      if (j > 1) fyy += c * j * (j - 1) * xp[i] * yp[j - 2];
    }
  }
}

double DenseEvaluator::magnitude(double x, double y) const {
  if (c_.empty()) return 0.0;
  const int w = degree_ + 1;
  double xp[kMaxDegree + 1], yp[kMaxDegree + 1];
  powers(std::fabs(x), degree_, xp);
  powers(std::fabs(y), degree_, yp);
  double acc = 0.0;
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) acc += std::fabs(c_[i * w + j]) * xp[i] * yp[j];
  }
  return acc;
}

}  // namespace parabolica
