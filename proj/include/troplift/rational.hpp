#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace troplift {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den (den > 0, reduced).
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

/// Least common multiple of all denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

/// Converts an integral rational to long; throws std::overflow_error if it
/// does not fit or std::invalid_argument if it is not integral.
long to_long(const Rational& q);

}  // namespace troplift
