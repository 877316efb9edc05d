#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pdequad {

/// Exact arbitrary-precision rational. All symbolic coefficients use this type.
using Rational = mpq_class;

/// Renders `a` or `a/b` in lowest terms.
std::string to_string(const Rational& q);

/// Parses an integer, `a/b`, or a decimal literal such as `0.125` exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace pdequad
