#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tq {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms. The two-argument mpq_class constructor does not
/// reduce, so every fraction built from integers goes through here.
Rational frac(long n, long d);

/// Formats as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

/// 2-adic valuation of a nonzero rational.
long v2(const Rational& q);

/// q * 2^{-v2(q)}.
Rational strip_two(const Rational& q);

/// p^e for a (possibly negative) exponent.
Rational rational_pow(const Rational& base, long e);

}  // namespace tq
