#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polpoisson {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace polpoisson
