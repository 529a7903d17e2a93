#pragma once

#include <stdexcept>
#include <string>

#include "modcurve/belyi/ratmap.hpp"

namespace modcurve {

// Parse failure with a 1-based column into the offending input.
struct ParseError : std::runtime_error {
    long column;
    ParseError(const std::string& message, long col)
        : std::runtime_error(message + " at column " + std::to_string(col)), column(col) {}
};

// Rational-map expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/')? factor)*        (juxtaposition multiplies)
//   factor := '-' factor | base ('^' ['-'] integer)?
//   base   := integer | 'z' | 'i' | 'sqrt' '(' ['-'] integer ')' | '(' expr ')'
// 'i' abbreviates sqrt(-1); the sqrt radicand must be squarefree and not 0
// or 1.  Exponent magnitude is capped at 512.  The result must be a
// nonconstant map; canonical printing (RatMap::text) re-parses to the same
// map.
RatMap parse_rat_map(const std::string& text);

}  // namespace modcurve
