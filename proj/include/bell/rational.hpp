#pragma once

#include <gmpxx.h>

#include <string>

namespace bell {

// All probabilities, coefficients and bounds are exact rationals.
using Rational = mpq_class;

// Parses "p/q" or "p" (decimal digit strings, optional sign). q must be
// positive; the result is gcd-reduced. Throws DocumentError on bad syntax.
Rational parse_rational(const std::string& text);

// Canonical "p/q" rendering; the denominator is always printed ("3/1").
std::string rational_string(const Rational& value);

// Decimal rendering with 12 significant digits, computed from the exact
// value (round half away from zero). Falls back to scientific notation
// outside [1e-4, 1e15).
std::string rational_decimal(const Rational& value);

// |value| <= threshold, exact.
bool abs_leq(const Rational& value, const Rational& threshold);

}  // namespace bell
