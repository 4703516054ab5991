#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/scalar.hpp"

namespace cremona {

// Exponent vector of a monomial x^a; length equals the ambient variable count.
using Monomial = std::vector<std::uint32_t>;

unsigned mono_degree(const Monomial &m);
Monomial mono_mul(const Monomial &a, const Monomial &b);

// Graded lexicographic order, x1 > x2 > ... > xn, largest term first.
// Poly's term map iterates in this order, which is also the printing order.
struct MonoGradedLexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

// Sparse multivariate polynomial over Q with a fixed variable count n.
// No stored coefficient is zero; the zero polynomial has an empty term map.
class Poly {
public:
  using TermMap = std::map<Monomial, Scalar, MonoGradedLexGreater>;

  explicit Poly(int n = 0) : n_(n) {}

  static Poly zero(int n) { return Poly(n); }
  static Poly constant(int n, const Scalar &c);
  static Poly variable(int n, int i); // 1-based index
  static Poly monomial(int n, Monomial m, const Scalar &c);

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  // total degree; -1 for the zero polynomial
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }

  // top-degree homogeneous part (zero poly for the zero poly)
  Poly leading_form() const;
  const Monomial &leading_monomial() const; // requires !is_zero()
  const Scalar &leading_coefficient() const;

  Poly operator-() const;
  Poly &operator+=(const Poly &g);
  Poly &operator-=(const Poly &g);
  friend Poly operator+(Poly f, const Poly &g) { f += g; return f; }
  friend Poly operator-(Poly f, const Poly &g) { f -= g; return f; }
  friend Poly operator*(const Poly &f, const Poly &g);
  Poly &operator*=(const Poly &g) { *this = *this * g; return *this; }
  friend Poly operator*(const Poly &f, const Scalar &c);
  friend Poly operator*(const Scalar &c, const Poly &f) { return f * c; }
  bool operator==(const Poly &g) const {
    return n_ == g.n_ && terms_ == g.terms_;
  }
  bool operator!=(const Poly &g) const { return !(*this == g); }

  Poly pow(unsigned e) const;
  // formal partial derivative d/dx_i, 1-based
  Poly partial(int i) const;
  // evaluate at a tuple of polynomials in a common (possibly different) ring
  Poly substitute(const std::vector<Poly> &images) const;

  // accumulate one term, dropping the entry if the coefficient cancels
  void add_term(const Monomial &m, const Scalar &c);

private:
  int n_;
  TermMap terms_;
};

// f/g when g divides f exactly; empty otherwise
bool divide_exact(const Poly &f, const Poly &g, Poly &quotient);

// canonical text: graded-lex descending terms, coefficients in lowest terms
std::string format_poly(const Poly &f);

// global cap on the term count of any computed polynomial (CREMONA_MAX_TERMS)
std::size_t max_poly_terms();
void set_max_poly_terms(std::size_t cap);

} // namespace cremona
