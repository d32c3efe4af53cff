#include "parabolica/rational.hpp"

#include <cmath>

#include "parabolica/errors.hpp"

namespace parabolica {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroInput: return "zero input";
    case ErrorCode::kDegreeTooLow: return "degree too low";
    case ErrorCode::kNotHomogeneous: return "not homogeneous";
    case ErrorCode::kOddDegree: return "odd degree";
    case ErrorCode::kUnlabelable: return "unlabelable at infinity";
    case ErrorCode::kSharedComponent: return "shared component suspected";
    case ErrorCode::kSingularCurve: return "singular curve suspected";
    case ErrorCode::kTangentToInfinity: return "tangent to line at infinity";
    case ErrorCode::kTracingInconsistency: return "tracing inconsistency";
    case ErrorCode::kFlatPoint: return "flat point";
    case ErrorCode::kRepeatedFactor: return "repeated factor";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown";
}

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

double to_double(const Rational& r) {
  // mpq_get_d truncates; good enough except for huge numerators, where we
  // fall back to a scaled division.
  double d = r.get_d();
  if (std::isfinite(d)) return d;
  long exp_num = 0, exp_den = 0;
  double mn = mpz_get_d_2exp(&exp_num, r.get_num_mpz_t());
  double md = mpz_get_d_2exp(&exp_den, r.get_den_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(exp_num - exp_den));
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::kInvalidArgument, "non-finite value");
  Rational r(value);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "malformed rational '" + text + "'");
  }
  r.canonicalize();
  return r;
}

int sign(const Rational& r) { return sgn(r); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational best_rational(const Rational& value, const Integer& max_den) {
  // Convergents of the continued fraction; stop before the denominator
  // exceeds max_den.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational x = value;
  for (int iter = 0; iter < 200; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational frac = x - Rational(a);
    if (frac == 0) break;
    x = 1 / frac;
  }
  if (q1 == 0) return Rational(p0, q0);
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace parabolica
