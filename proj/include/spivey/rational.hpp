#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spivey {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized, which all helpers below ensure.
using Rational = mpq_class;

/// Parses "a" or "a/b" (optional leading '-', decimal digits only).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);

std::string to_string(const Integer& value);

/// value^exponent with 0^0 == 1.
Rational pow(const Rational& value, unsigned exponent);

Integer factorial(unsigned n);

}  // namespace spivey
