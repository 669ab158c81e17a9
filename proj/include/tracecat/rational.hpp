#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tracecat {

// Arbitrary-precision rational, always kept canonical (reduced, positive
// denominator).
using Rational = mpq_class;

// "p/q" or "p".
std::string to_string(const Rational& r);

// Accepts [+-]digits[/digits]; throws ParseError otherwise or on a zero
// denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace tracecat
