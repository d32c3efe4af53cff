#pragma once

#include <gmpxx.h>

#include <string>

namespace parabolica {

using Integer = mpz_class;
using Rational = mpq_class;

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
Rational ratio(long num, long den);

/// Canonical "p" or "p/q" text with q > 0.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Exact rational value of a finite double.
Rational exact_rational(double value);

/// Parses "p" or "p/q" (optionally signed). Throws Error on malformed text.
Rational parse_rational(const std::string& text);

int sign(const Rational& r);

Rational abs(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

/// Continued-fraction approximation of `value` with denominator <= max_den.
Rational best_rational(const Rational& value, const Integer& max_den);

}  // namespace parabolica
