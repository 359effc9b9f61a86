#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rook {

/// Exact rational scalar. mpq_class keeps values canonical (den > 0, reduced)
/// after every arithmetic operation.
using Rational = mpq_class;

/// Parses "a", "a/b" or "-a/b". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "1/1", "-3/2".
std::string format_rational(const Rational& q);

inline Rational factorial_q(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace rook
