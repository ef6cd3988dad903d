#pragma once

#include <string_view>

#include "sigsurf/polynomial.hpp"

namespace sigsurf {

// Parses a polynomial in x and y over Q.
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' INT)?
//   primary := NUMBER | 'x' | 'y' | '(' expr ')'
//   NUMBER  := INT ('/' INT)?
//
// Whitespace is ignored. Throws SyntaxError (with the offending column) or
// Error(Errc::unsupported_variable) for identifiers other than x and y.
BivariatePoly parse_polynomial(std::string_view text);

// Largest exponent accepted after '^'.
inline constexpr std::uint32_t kMaxParsedExponent = 4096;

}  // namespace sigsurf
