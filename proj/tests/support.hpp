#pragma once

// Shared helpers for the test suites: deterministic random generators and
// small independent oracles (point evaluation, cofactor determinants) that
// avoid the library's own computation paths.

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/automorphism.hpp"
#include "cremona/derivation.hpp"
#include "cremona/poly.hpp"
#include "cremona/tame.hpp"

namespace testsupport {

using namespace cremona;

using Rng = std::mt19937_64;

inline long rand_range(Rng &rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Scalar random_scalar(Rng &rng, long max_num = 5, long max_den = 3) {
  long num = rand_range(rng, -max_num, max_num);
  long den = rand_range(rng, 1, max_den);
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline Scalar random_nonzero_scalar(Rng &rng, long max_num = 5,
                                    long max_den = 3) {
  for (;;) {
    Scalar s = random_scalar(rng, max_num, max_den);
    if (s != 0) return s;
  }
}

inline Monomial random_monomial(Rng &rng, int n, int max_deg) {
  Monomial m(n, 0);
  int deg = static_cast<int>(rand_range(rng, 0, max_deg));
  for (int d = 0; d < deg; ++d)
    m[rand_range(rng, 0, n - 1)] += 1;
  return m;
}

inline Poly random_poly(Rng &rng, int n, int max_terms, int max_deg) {
  Poly p(n);
  int terms = static_cast<int>(rand_range(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t)
    p.add_term(random_monomial(rng, n, max_deg), random_scalar(rng));
  return p;
}

inline Poly random_nonzero_poly(Rng &rng, int n, int max_terms, int max_deg) {
  for (;;) {
    Poly p = random_poly(rng, n, max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
}

// random polynomial using only variables with index > lo (1-based bound)
inline Poly random_poly_in_tail(Rng &rng, int n, int lo, int max_terms,
                                int max_deg) {
  Poly p(n);
  int terms = static_cast<int>(rand_range(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m(n, 0);
    int deg = static_cast<int>(rand_range(rng, 0, max_deg));
    for (int d = 0; d < deg && lo < n; ++d)
      m[rand_range(rng, lo, n - 1)] += 1;
    p.add_term(m, random_scalar(rng));
  }
  return p;
}

// strictly triangular: D(xi) uses only variables of larger index
inline Derivation random_triangular_derivation(Rng &rng, int n, int max_terms,
                                               int max_deg) {
  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i)
    images.push_back(i < n ? random_poly_in_tail(rng, n, i, max_terms, max_deg)
                           : Poly::zero(n));
  return Derivation(n, std::move(images));
}

inline std::vector<Scalar> random_point(Rng &rng, int n) {
  std::vector<Scalar> pt;
  pt.reserve(n);
  for (int i = 0; i < n; ++i) pt.push_back(random_scalar(rng, 7, 4));
  return pt;
}

// ---- independent oracles -------------------------------------------------

// direct evaluation of a polynomial at a rational point
inline Scalar eval_poly(const Poly &f, const std::vector<Scalar> &pt) {
  Scalar sum(0);
  for (const auto &[m, c] : f.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= pt[i];
    sum += term;
  }
  return sum;
}

// Laplace cofactor expansion, an independent determinant route
inline Poly laplace_det(const std::vector<std::vector<Poly>> &m, int nvars) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(nvars, Scalar(1));
  if (n == 1) return m[0][0];
  Poly det(nvars);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly cof = m[0][j] * laplace_det(minor, nvars);
    if (j % 2 == 0) det += cof; else det -= cof;
  }
  return det;
}

// ---- random factored words -----------------------------------------------

inline QMatrix random_invertible_matrix(Rng &rng, int n) {
  for (;;) {
    QMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = random_scalar(rng, 3, 2);
    if (qmat_det(m) != 0) return m;
  }
}

inline QMatrix random_sl_matrix(Rng &rng, int n) {
  // product of random elementary matrices, so the determinant is exactly 1
  QMatrix m = qmat_identity(n);
  int ops = static_cast<int>(rand_range(rng, 1, 6));
  for (int o = 0; o < ops; ++o) {
    int r = static_cast<int>(rand_range(rng, 0, n - 1));
    int k = static_cast<int>(rand_range(rng, 0, n - 1));
    if (r == k) continue;
    Scalar t = random_scalar(rng, 3, 2);
    for (int j = 0; j < n; ++j) m[r][j] += t * m[k][j];
  }
  return m;
}

// a tame word over n variables whose expansion degree stays <= deg_cap
inline FactoredAut random_tame_word(Rng &rng, int n, int max_factors,
                                    int deg_cap) {
  FactoredAut w(n);
  int factors = static_cast<int>(rand_range(rng, 1, max_factors));
  for (int f = 0; f < factors; ++f) {
    FactoredAut next(n);
    switch (rand_range(rng, 0, 2)) {
    case 0:
      next = mk_linear(random_invertible_matrix(rng, n));
      break;
    case 1: {
      std::vector<Scalar> c;
      for (int i = 0; i < n; ++i) c.push_back(random_scalar(rng));
      next = mk_translation(c);
      break;
    }
    default: {
      int i = static_cast<int>(rand_range(rng, 1, n));
      Poly g(n);
      int terms = static_cast<int>(rand_range(rng, 1, 3));
      for (int t = 0; t < terms; ++t) {
        Monomial m(n, 0);
        int deg = static_cast<int>(rand_range(rng, 1, 3));
        for (int d = 0; d < deg; ++d) {
          int j = static_cast<int>(rand_range(rng, 1, n - 1));
          m[(i - 1 + j) % n] += 1;
        }
        g.add_term(m, random_scalar(rng));
      }
      if (g.is_zero()) continue;
      next = mk_elementary(n, i, g);
      break;
    }
    }
    FactoredAut candidate = compose(w, next);
    if (candidate.expand().degree() > deg_cap) break;
    w = candidate;
  }
  return w;
}

} // namespace testsupport
