#pragma once

#include <gmpxx.h>

#include <string>

namespace evcom {

/// Exact rational scalar. All identity weights are powers of the input q,
/// kept exact so that weight comparisons are never approximate.
using Rational = mpq_class;

/// Accepts an integer literal or "p/q" with a nonzero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form, inverse of parse_rational: "3", "-1", "2/3".
std::string format_rational(const Rational& value);

Rational rational_pow(const Rational& base, long exponent);

}  // namespace evcom
