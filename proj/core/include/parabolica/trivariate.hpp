#pragma once

#include <array>
#include <map>

#include "parabolica/bivariate.hpp"
#include "parabolica/rational.hpp"

namespace parabolica {

/// Homogeneous polynomial in three variables (x, y, z) -- or (u, v, w) on the
/// Poincare sphere -- with a fixed total degree. The zero polynomial keeps its
/// nominal degree so that sums and products stay well-typed.
class TrivariateHomogeneousPoly {
 public:
  using Exponent = std::array<int, 3>;
  using TermMap = std::map<Exponent, Rational>;

  TrivariateHomogeneousPoly() = default;
  explicit TrivariateHomogeneousPoly(int degree) : degree_(degree) {}
  /// Throws kNotHomogeneous if some monomial has the wrong degree.
  TrivariateHomogeneousPoly(int degree, TermMap terms);

  static TrivariateHomogeneousPoly variable(int index);  // 0 -> x, 1 -> y, 2 -> z

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int i, int j, int k) const;
  void add_term(const Rational& c, int i, int j, int k);

  Rational operator()(const Rational& x, const Rational& y, const Rational& z) const;
  double evaluate(double x, double y, double z) const;
  double magnitude(double x, double y, double z) const;

  /// Partial derivative in variable 0, 1 or 2; degree drops by one.
  TrivariateHomogeneousPoly derivative(int index) const;

  /// P(x, y, 0).
  BivariatePoly at_infinity() const;
  /// P(x, y, 1).
  BivariatePoly dehomogenize() const;
  /// P(1, v, w) as a polynomial in (v, w) stored as (x, y).
  BivariatePoly chart_u1() const;

  TrivariateHomogeneousPoly& operator+=(const TrivariateHomogeneousPoly& o);
  TrivariateHomogeneousPoly& operator-=(const TrivariateHomogeneousPoly& o);
  TrivariateHomogeneousPoly& operator*=(const Rational& c);

  friend TrivariateHomogeneousPoly operator+(TrivariateHomogeneousPoly a,
                                             const TrivariateHomogeneousPoly& b) {
    return a += b;
  }
  friend TrivariateHomogeneousPoly operator-(TrivariateHomogeneousPoly a,
                                             const TrivariateHomogeneousPoly& b) {
    return a -= b;
  }
  friend TrivariateHomogeneousPoly operator*(const TrivariateHomogeneousPoly& a,
                                             const TrivariateHomogeneousPoly& b);
  friend TrivariateHomogeneousPoly operator*(TrivariateHomogeneousPoly a, const Rational& c) {
    return a *= c;
  }
  friend bool operator==(const TrivariateHomogeneousPoly& a, const TrivariateHomogeneousPoly& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_ = 0;
  TermMap terms_;
};

/// z^degree p(x/z, y/z). Requires deg p <= degree.
TrivariateHomogeneousPoly homogenize(const BivariatePoly& p, int degree);

/// The homogenization H_f of hessian(f) at degree 2n - 4, n = deg f.
/// Throws kDegreeTooLow when n < 3. A zero result means hessian(f) vanishes
/// identically.
TrivariateHomogeneousPoly projective_hessian(const BivariatePoly& f);

}  // namespace parabolica
