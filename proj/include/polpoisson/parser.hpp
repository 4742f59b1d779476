#pragma once

#include "polpoisson/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace polpoisson {

/// Raised for malformed polynomial text; `position()` is the 0-based byte
/// offset where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses polynomial text over the declared variables.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*      divisor must be a nonzero constant
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?           integer must be nonnegative
///   primary := integer | identifier | '(' expr ')'
///
/// so `3/2*y1^2` reads the literal 3/2 times y1 squared.
Polynomial parse_polynomial(std::string_view text, const VarSetPtr& vars);

}  // namespace polpoisson
