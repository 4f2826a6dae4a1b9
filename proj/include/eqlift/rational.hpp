#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace eqlift {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optionally signed). Throws Error(parse) on malformed input
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always "numerator/denominator" in lowest terms, e.g. "-1/1", "3/4".
std::string format_rational(const Rational& q);

}  // namespace eqlift
