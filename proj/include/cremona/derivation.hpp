#pragma once

#include <utility>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

// A derivation of Q[x1..xn], determined by its images D(xi); the action on
// arbitrary polynomials is the Leibniz extension D(f) = sum_i D(xi) * df/dxi.
class Derivation {
public:
  Derivation(int n, std::vector<Poly> images);

  static Derivation zero(int n);
  // D_i = d/dx_i
  static Derivation partial(int n, int i);
  // c * x^m * D_i
  static Derivation monomial(int n, Monomial m, const Scalar &c, int i);

  int vars() const { return n_; }
  const Poly &image(int i) const { return images_[i - 1]; } // 1-based
  const std::vector<Poly> &images() const { return images_; }
  bool is_zero() const;
  // max image degree; -1 for the zero derivation
  int degree() const;

  Derivation operator+(const Derivation &other) const;
  Derivation operator-(const Derivation &other) const;
  Derivation operator*(const Scalar &c) const;
  bool operator==(const Derivation &other) const;
  bool operator!=(const Derivation &other) const { return !(*this == other); }

private:
  int n_;
  std::vector<Poly> images_;
};

Poly derive(const Derivation &D, const Poly &f);

// [P,Q] with images P(Q(xi)) - Q(P(xi))
Derivation commutator(const Derivation &P, const Derivation &Q);

bool kernel_member(const Derivation &D, const Poly &f);

// Three-valued local-nilpotency verdict. Proven carries exact vanishing
// orders m_i with D^{m_i}(x_i) = 0 and D^{m_i - 1}(x_i) != 0, which extends
// to the whole algebra by Leibniz induction. Disproven fires only on the
// sound refutation criteria listed below. Everything else is Unknown.
struct NilpotencyCertificate {
  enum class Kind { Proven, Disproven, Unknown };
  enum class Refutation {
    // a single monomial image c*x^a on x_i with a_i >= 1: iterated images
    // stay a single monomial whose coefficient is a product of positive
    // integers, so the chain never vanishes
    MonomialCriterion,
    // all images of degree <= 1: the derivation restricts to the span of
    // {1, x1..xn}; local nilpotency is exactly nilpotency of that matrix
    LinearCriterion,
  };

  Kind kind = Kind::Unknown;
  std::vector<int> orders; // Proven: per-generator vanishing orders
  int witness = 0;         // Disproven: 1-based variable with a persistent chain
  Refutation reason = Refutation::MonomialCriterion;
  int iter_bound = 0, deg_bound = 0; // Unknown: the exhausted bounds

  bool proven() const { return kind == Kind::Proven; }

  static NilpotencyCertificate make_proven(std::vector<int> orders);
  static NilpotencyCertificate make_disproven(int witness, Refutation reason);
  static NilpotencyCertificate make_unknown(int iter_bound, int deg_bound);
};

inline constexpr int default_iter_bound = 64;
inline constexpr int default_deg_bound = 10000;

// Certification strategy, in order: the monomial refutation criterion; the
// exact linear-image decision; unbounded iteration when the variable
// dependency graph is acyclic (triangular under a permutation, so chains
// provably terminate); otherwise iteration within the given bounds.
NilpotencyCertificate check_locally_nilpotent(const Derivation &D,
                                              int iter_bound = default_iter_bound,
                                              int deg_bound = default_deg_bound);

// f*D for f in Ker D. Since D(f) = 0, (fD)^k = f^k D^k on every input, so
// the returned certificate keeps D's exact orders (all 1 when f = 0).
std::pair<Derivation, NilpotencyCertificate>
scale_by_kernel(const Derivation &D, const NilpotencyCertificate &cert,
                const Poly &f);

// sum_{k>=0} t^k D^k(f) / k!, a finite sum under a Proven certificate
Poly exp_apply(const Derivation &D, const NilpotencyCertificate &cert,
               const Poly &f, const Scalar &t);

} // namespace cremona
