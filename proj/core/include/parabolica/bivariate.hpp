#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parabolica/geometry.hpp"
#include "parabolica/rational.hpp"
#include "parabolica/univariate.hpp"

namespace parabolica {

/// Sparse polynomial in (x, y) with exact rational coefficients.
/// Invariant: no stored coefficient is zero.
class BivariatePoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(TermMap terms);

  static BivariatePoly constant(const Rational& c);
  static BivariatePoly x();
  static BivariatePoly y();
  static BivariatePoly monomial(const Rational& c, int i, int j);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return degree_; }
  int degree_in_x() const;
  int degree_in_y() const;
  bool is_homogeneous() const;

  Rational coefficient(int i, int j) const;
  void add_term(const Rational& c, int i, int j);

  Rational operator()(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;
  int sign_at(const Rational& x, const Rational& y) const;

  BivariatePoly dx() const;
  BivariatePoly dy() const;

  /// Sum of the terms of total degree d.
  BivariatePoly homogeneous_part(int d) const;
  /// f(x0, t) as a polynomial in t.
  UnivariatePoly restrict_x(const Rational& x0) const;
  /// f(t, y0) as a polynomial in t.
  UnivariatePoly restrict_y(const Rational& y0) const;
  /// For homogeneous input: h(1, t).
  UnivariatePoly dehomogenize_x() const;
  /// f(a*x + b*y, c*x + d*y).
  BivariatePoly linear_substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const;
  /// Coefficients in y, each a polynomial in x: f = sum_k c_k(x) y^k.
  std::vector<UnivariatePoly> coefficients_in_y() const;
  /// Exchanges the roles of x and y.
  BivariatePoly swapped() const;

  /// sum |c_ij| |x|^i |y|^j, the natural scale for residuals at (x, y).
  double magnitude(double x, double y) const;
  /// Largest absolute coefficient.
  Rational max_abs_coefficient() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const Rational& c);
  BivariatePoly operator-() const;

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
  friend BivariatePoly operator*(const Rational& c, BivariatePoly a) { return a *= c; }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void recompute_degree();
  TermMap terms_;
  int degree_ = -1;
};

BivariatePoly pow(const BivariatePoly& p, unsigned exponent);

struct HomogeneousComponent {
  int degree;
  BivariatePoly part;
};

/// f = sum of its homogeneous parts, ascending degree, empty parts omitted.
/// Throws kZeroInput for the zero polynomial.
std::vector<HomogeneousComponent> homogeneous_decomposition(const BivariatePoly& f);

/// f_xx f_yy - f_xy^2, exact.
BivariatePoly hessian(const BivariatePoly& f);

/// Homogeneous part of highest degree.
BivariatePoly top_part(const BivariatePoly& f);

/// Fast double-precision evaluator with gradient and Hessian, built once from
/// exact coefficients.
class DenseEvaluator {
 public:
  DenseEvaluator() = default;
  explicit DenseEvaluator(const BivariatePoly& p);

  double operator()(double x, double y) const;
  Point2 gradient(double x, double y) const;
  /// (f_xx, f_xy, f_yy)
  void second_derivatives(double x, double y, double& fxx, double& fxy, double& fyy) const;
  double magnitude(double x, double y) const;
  int degree() const { return degree_; }

 private:
  int degree_ = -1;
  std::vector<double> c_;  // c_[i * (degree_ + 1) + j] for x^i y^j
};

}  // namespace parabolica
