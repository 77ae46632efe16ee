#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace soflag {

/// Arbitrary-precision rational number. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and finite decimals such as "-1.5".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

/// Binomial coefficient C(n, k) as an exact integer; zero when k > n.
Rational binomial(unsigned n, unsigned k);

double to_double(const Rational& q);

}  // namespace soflag
