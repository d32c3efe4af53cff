#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "parabolica/rational.hpp"

namespace parabolica {

/// Dense polynomial in one variable with exact rational coefficients,
/// stored low to high degree. The zero polynomial has no coefficients.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coefficients);
  UnivariatePoly(std::initializer_list<Rational> coefficients);

  static UnivariatePoly constant(const Rational& c);
  static UnivariatePoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;
  int sign_at(const Rational& t) const;

  UnivariatePoly derivative() const;
  UnivariatePoly monic() const;

  /// p(t + shift).
  UnivariatePoly taylor_shift(const Rational& shift) const;
  /// p(scale * t).
  UnivariatePoly scaled(const Rational& scale) const;
  /// t^deg p(1/t).
  UnivariatePoly reversed() const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const Rational& c);

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(UnivariatePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q. Throws on division by zero.
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a,
                                                 const UnivariatePoly& b);

/// Monic gcd (zero if both are zero).
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

/// p / gcd(p, p'), monic.
UnivariatePoly squarefree_part(const UnivariatePoly& p);

/// Yun's decomposition: p = lc * prod factors[i]^(i+1), each factor monic and
/// squarefree, pairwise coprime. Trailing entries may be constant 1.
std::vector<UnivariatePoly> squarefree_decomposition(const UnivariatePoly& p);

/// Integer coefficients proportional to p with positive content removed.
std::vector<Integer> primitive_integer_coefficients(const UnivariatePoly& p);

/// Cauchy bound: every complex root has |t| < bound.
Rational cauchy_bound(const UnivariatePoly& p);

}  // namespace parabolica
