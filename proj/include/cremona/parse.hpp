#pragma once

#include <string_view>

#include "cremona/poly.hpp"

namespace cremona {

// Polynomial grammar (whitespace insignificant):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*      ('/' divisor must be constant)
//   factor   := primary ('^' uint)*
//   primary  := rational | var | '(' expr ')'
//   var      := 'x' uint                        (1-based, no space after 'x')
//   rational := ['-'] uint ('/' uint)?
// Implicit multiplication is a syntax error ("2x1" is rejected).
// Errors carry the byte offset of the offending character.
Poly parse_poly(std::string_view text, int n);

} // namespace cremona
