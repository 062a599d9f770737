#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maxcurve {

// mpq_class keeps values canonical: positive denominator, reduced, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q". Throws FormatError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace maxcurve
