#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cremona/automorphism.hpp"
#include "cremona/derivation.hpp"

namespace cremona {

// A character of the diagonal torus {diag(t1..tn) : prod ti = 1}, encoded as
// an integer exponent vector modulo the diagonal line Z*(1,..,1); the
// canonical representative is shifted so its minimum entry is 0.
class Weight {
public:
  static Weight from_raw(std::vector<std::int64_t> v);

  const std::vector<std::int64_t> &rep() const { return rep_; }
  bool is_trivial() const;
  int vars() const { return static_cast<int>(rep_.size()); }

  // prod s_i^{r_i}; well defined on the class whenever prod s_i = 1
  Scalar evaluate(const std::vector<Scalar> &entries) const;

  bool operator==(const Weight &other) const { return rep_ == other.rep_; }
  bool operator!=(const Weight &other) const { return !(*this == other); }
  bool operator<(const Weight &other) const { return rep_ < other.rep_; }

  std::string str() const; // "(0,2)"

private:
  std::vector<std::int64_t> rep_;
};

class TorusElement {
public:
  // generic element with indeterminate entries
  static TorusElement symbolic(int n);
  // NotInTorus unless all entries are nonzero and their product is 1
  static TorusElement concrete(std::vector<Scalar> entries);
  static TorusElement identity(int n);

  int vars() const { return n_; }
  bool is_symbolic() const { return entries_.empty(); }
  const std::vector<Scalar> &entries() const { return entries_; }

private:
  TorusElement(int n, std::vector<Scalar> entries)
      : n_(n), entries_(std::move(entries)) {}
  int n_;
  std::vector<Scalar> entries_; // empty when symbolic
};

// Laurent polynomials in the torus parameters t1..t_{n-1}; the last entry is
// eliminated as tn = (t1...t_{n-1})^{-1}, so identity checks need no quotient
// ring. Exponent vectors have length n-1.
class LaurentPoly {
public:
  explicit LaurentPoly(int params = 0) : params_(params) {}
  static LaurentPoly monomial(std::vector<std::int64_t> e, const Scalar &c);

  int params() const { return params_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  const std::map<std::vector<std::int64_t>, Scalar> &terms() const {
    return terms_;
  }

  void add_term(const std::vector<std::int64_t> &e, const Scalar &c);
  LaurentPoly operator*(const Scalar &c) const;
  LaurentPoly &operator+=(const LaurentPoly &other);
  bool operator==(const LaurentPoly &other) const {
    return params_ == other.params_ && terms_ == other.terms_;
  }

  Scalar evaluate(const std::vector<Scalar> &params) const;
  std::string str() const; // e.g. "t1*t2^-1" terms joined with " + "

private:
  int params_;
  std::map<std::vector<std::int64_t>, Scalar> terms_;
};

// exponent vector of a torus character on x^v, reduced to the free
// parameters: w_j = v_j - v_n
std::vector<std::int64_t> reduce_character(const std::vector<std::int64_t> &v);

// polynomial in x1..xn whose coefficients are Laurent polynomials in the
// torus parameters
class ParamPoly {
public:
  explicit ParamPoly(int n = 0) : n_(n) {}

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, LaurentPoly, MonoGradedLexGreater> &terms() const {
    return terms_;
  }

  void add_term(const Monomial &m, const LaurentPoly &c);
  // accumulate L * p for an ordinary polynomial p
  void accumulate(const Poly &p, const LaurentPoly &coeff);
  bool operator==(const ParamPoly &other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

  Poly evaluate(const std::vector<Scalar> &params) const;
  std::string str() const;

private:
  int n_;
  std::map<Monomial, LaurentPoly, MonoGradedLexGreater> terms_;
};

// a derivation whose images have Laurent-polynomial coefficients, as produced
// by conjugating an ordinary derivation with a generic torus element
class ParamDerivation {
public:
  ParamDerivation(int n, std::vector<ParamPoly> images);

  int vars() const { return n_; }
  const ParamPoly &image(int i) const { return images_[i - 1]; } // 1-based
  const std::vector<ParamPoly> &images() const { return images_; }
  bool operator==(const ParamDerivation &other) const {
    return n_ == other.n_ && images_ == other.images_;
  }

  // substitute concrete torus entries (length n, product 1)
  Derivation evaluate(const std::vector<Scalar> &entries) const;

private:
  int n_;
  std::vector<ParamPoly> images_;
};

// the operator conjugate s . D . s^{-1}; each term c x^a D_i is rescaled by
// the character with exponent a - e_i (so D_i itself transforms by t_i^{-1})
Derivation conj_by_torus_concrete(const Derivation &D,
                                  const std::vector<Scalar> &entries);
ParamDerivation conj_by_torus_symbolic(const Derivation &D);
std::variant<Derivation, ParamDerivation>
conj_by_torus(const Derivation &D, const TorusElement &s);

// split D into weight components: each term c x^a D_i belongs to the class
// of a - e_i; components are nonzero, pairwise distinct, and sum to D
std::vector<std::pair<Weight, Derivation>> weight_decompose(const Derivation &D);

struct RootRejection {
  enum class Kind {
    NotHomogeneous,
    TrivialCharacter,
    NotLocallyNilpotent,
    NilpotencyUnknown,
  };
  Kind kind;
  std::string detail;
};

const char *root_rejection_name(RootRejection::Kind k);

// the root of D when D is a nonzero single-weight locally nilpotent
// derivation with nontrivial character; a structured rejection otherwise
std::variant<Weight, RootRejection>
is_root_vector(const Derivation &D, int iter_bound = default_iter_bound,
               int deg_bound = default_deg_bound);

// all monomial root vectors x^a D_i with deg(a) <= max_deg and a_i = 0,
// grouped by root; groups ordered by weight representative
std::vector<std::pair<Weight, std::vector<Derivation>>>
enumerate_monomial_root_vectors(int n, int max_deg, int jobs = 1);

// membership tests for the given word against the full diagonal torus,
// computed over the Laurent coefficient ring
bool centralizes_torus(const FactoredAut &sigma);
bool normalizes_torus(const FactoredAut &sigma);

} // namespace cremona
