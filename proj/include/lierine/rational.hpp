#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lierine {

/// Exact rational number. mpq_class arithmetic keeps values canonical
/// (lowest terms, positive denominator) as long as every hand-built value
/// goes through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses `int` or `int/posint` with an optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Integer factorial(unsigned n);

} // namespace lierine
