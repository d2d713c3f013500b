#pragma once

#include <string_view>

#include "recomp/ratmap.hpp"

namespace recomp {

/// Parses a rational map in the variable z. Grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := number | 'z' | '(' expr ')'
///   number := digits ('.' digits)? (('e' | 'E') '-'? digits)?
///
/// Exponents are non-negative integers; there is no implicit
/// multiplication. Throws Error with the offending position on bad input.
RatMap parse_map_expression(std::string_view text);

/// A JSON object {"num": [...], "den": [...]} or an expression as above.
RatMap parse_map(std::string_view text);

}  // namespace recomp
