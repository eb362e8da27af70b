#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace funobs {

// Canonical arbitrary-precision rational (denominator > 0, reduced).
using Rational = mpq_class;

// Accepts "p", "p/q", and decimal literals such as "-1.25e-3". Decimals are
// converted exactly through powers of ten, never through binary floating point.
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

// Nearest double when numerator and denominator fit in 53 bits (one IEEE
// division); otherwise GMP's truncating conversion.
double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace funobs
