#pragma once

#include <vector>

#include "cremona/automorphism.hpp"

namespace cremona {

// (x1+c1, ..., xn+cn) as the word exp(c1*D1) ... exp(cn*Dn)
FactoredAut mk_translation(const std::vector<Scalar> &c);

// a single nonsingular linear factor
FactoredAut mk_linear(QMatrix mat);

// x_i += f with f free of x_i, as the word exp(f*Di);
// VariableDependenceViolation otherwise
FactoredAut mk_elementary(int n, int i, const Poly &f);

// (x1+f1, ..., x_{n-1}+f_{n-1}, xn) with f_i in k[x_{i+1}..xn], as the word
// exp(f1*D1) ... exp(f_{n-1}*D_{n-1})
FactoredAut mk_triangular(const std::vector<Poly> &f);

// a word of transvection factors exp(t*xi*Dj), i != j, expanding to the
// given determinant-one matrix; DeterminantNotOne otherwise
FactoredAut sl_decompose(const QMatrix &mat);

// exp(fD) with D = -2*x2*D1 + x3*D2 and f = x1*x3 + x2^2
FactoredAut nagata();

// Decompose a plane automorphism into linear, translation and elementary
// factors by iterated leading-form cancellation. The working degree strictly
// decreases until the map is affine. NotAnAutomorphism when the Jacobian
// determinant is not a nonzero constant or no cancellation exists (a sound
// refutation in two variables).
FactoredAut jung_vdk_decompose(const PolyMap &sigma);

} // namespace cremona
