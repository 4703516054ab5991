#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cremona {

// Exact rational scalars. The constructions implemented here are stated over
// an algebraically closed field of characteristic 0, but every identity the
// library computes is a polynomial identity with rational coefficients, so
// all arithmetic runs over Q with no loss of exactness.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar scalar_of(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

// "p" or "p/q" in lowest terms
std::string format_scalar(const Scalar &s);

// accepts "p" and "p/q", optional sign, arbitrary precision
Scalar parse_scalar(const std::string &text);

// base^e for nonzero base; e may be negative
Scalar scalar_pow(const Scalar &base, std::int64_t e);

Integer factorial(unsigned k);

} // namespace cremona
