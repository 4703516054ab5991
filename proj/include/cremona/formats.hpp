#pragma once

#include <string>

#include "cremona/automorphism.hpp"
#include "cremona/derivation.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

// Derivation files: one line per generator, "D x<i> = <poly>"; omitted
// generators default to 0. Blank lines and '#' comments are ignored.
Derivation parse_derivation(const std::string &text, int n);
std::string format_derivation(const Derivation &d);
// "; "-joined single-line form ("0" for the zero derivation)
std::string format_derivation_inline(const Derivation &d);

// Map files: one line per generator, "x<i> -> <poly>", each of x1..xn
// exactly once.
PolyMap parse_poly_map(const std::string &text, int n);
std::string format_poly_map(const PolyMap &m);

// Matrix text: "[[a,b],[c,d]]" with rational entries.
QMatrix parse_matrix(const std::string &text);
std::string format_matrix(const QMatrix &m);

// Rational vector text: "[c1,...,cn]".
std::vector<Scalar> parse_scalar_vector(const std::string &text);
std::string format_scalar_vector(const std::vector<Scalar> &v);

// Factored words: one factor per line,
//   linear: [[a,b],[c,d]]
//   translate: [c1,...,cn]
//   exp: t=<rational>; f=<poly>; D x<i>=<poly>; ...
// f is optional (default 1) and is folded into the derivation on input; the
// derivation must certify locally nilpotent within the given bounds.
FactoredAut parse_factored_word(const std::string &text, int n,
                                int iter_bound = default_iter_bound,
                                int deg_bound = default_deg_bound);
std::string format_factored_word(const FactoredAut &w);

} // namespace cremona
