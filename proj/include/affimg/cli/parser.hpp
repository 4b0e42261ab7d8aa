#pragma once

#include <cstddef>
#include <string_view>

#include "affimg/polynomial.hpp"

namespace affimg::cli {

/// Where a fragment sits in its source file, for error positions.
struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses an expression over `ring`.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' exponent)?      exponent := integer ('^' exponent)?
///   atom   := integer | integer '/' integer | name | '(' expr ')'
///
/// So -x^2 is -(x^2) and x^2^3 is x^8. Throws ParseError.
Polynomial parsePolynomial(std::string_view src, const RingContext& ring,
                           SourcePosition at = {});

/// An integer or p/q literal, optionally negated.
Rational parseRational(std::string_view src, SourcePosition at = {});

}  // namespace affimg::cli
