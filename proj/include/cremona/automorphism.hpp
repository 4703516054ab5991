#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "cremona/derivation.hpp"
#include "cremona/linalg.hpp"
#include "cremona/poly.hpp"

namespace cremona {

// A polynomial endomorphism of Q[x1..xn], stored by the images of the
// generators. It acts on polynomials by substitution: sigma(f) = f(images).
class PolyMap {
public:
  PolyMap(int n, std::vector<Poly> images);

  static PolyMap identity(int n);

  int vars() const { return n_; }
  const Poly &image(int i) const { return images_[i - 1]; } // 1-based
  const std::vector<Poly> &images() const { return images_; }
  // max component degree
  int degree() const;
  bool is_identity() const;

  bool operator==(const PolyMap &other) const {
    return n_ == other.n_ && images_ == other.images_;
  }
  bool operator!=(const PolyMap &other) const { return !(*this == other); }

private:
  int n_;
  std::vector<Poly> images_;
};

// sigma applied to a polynomial: f(sigma(x1), ..., sigma(xn))
Poly apply_map(const PolyMap &sigma, const Poly &f);

// (sigma . tau)(xi) = sigma(tau(xi))
PolyMap compose(const PolyMap &sigma, const PolyMap &tau);

// det of the matrix with entry (i,j) = d(sigma(xj))/dxi, computed by
// fraction-free (Bareiss) elimination over the polynomial ring
Poly jacobian_det(const PolyMap &sigma);

// true iff jacobian_det(sigma) is the constant 1
bool is_volume_preserving(const PolyMap &sigma);

// One invertible-by-construction building block of an automorphism word.
class Factor {
public:
  enum class Kind { Linear, Translation, ExpLnd };

  struct Linear {
    QMatrix mat; // image of xi = row i applied to (x1..xn)
    Scalar det;  // cached, nonzero
  };
  struct Translation {
    std::vector<Scalar> shift;
  };
  struct ExpLnd {
    Scalar t;
    Derivation d;
    NilpotencyCertificate cert; // always Proven
  };

  // SingularMatrix if det(mat) == 0
  static Factor linear(QMatrix mat);
  static Factor translation(std::vector<Scalar> shift);
  // UncertifiedInput unless cert is Proven
  static Factor exp_lnd(const Scalar &t, Derivation d,
                        NilpotencyCertificate cert);

  Kind kind() const;
  int vars() const { return n_; }
  const Linear &as_linear() const { return std::get<Linear>(v_); }
  const Translation &as_translation() const { return std::get<Translation>(v_); }
  const ExpLnd &as_exp() const { return std::get<ExpLnd>(v_); }

  PolyMap expand() const;
  Factor inverse() const;

private:
  Factor(int n, std::variant<Linear, Translation, ExpLnd> v)
      : n_(n), v_(std::move(v)) {}
  int n_;
  std::variant<Linear, Translation, ExpLnd> v_;
};

// A word of factors. The expansion is the left-to-right composition of the
// factor expansions and is memoized with compute-once publication, so shared
// copies may expand concurrently.
class FactoredAut {
public:
  explicit FactoredAut(int n); // empty word: the identity
  FactoredAut(int n, std::vector<Factor> word);

  int vars() const { return n_; }
  const std::vector<Factor> &word() const { return word_; }
  std::size_t size() const { return word_.size(); }

  const PolyMap &expand() const;
  // reversed word of exact factor inverses
  FactoredAut inverse() const;

private:
  struct Cache {
    std::once_flag once;
    std::optional<PolyMap> map;
  };
  int n_;
  std::vector<Factor> word_;
  std::shared_ptr<Cache> cache_;
};

// word concatenation; expand(compose(a,b)) == compose(expand(a), expand(b))
FactoredAut compose(const FactoredAut &a, const FactoredAut &b);

// the one-factor word exp(tD)
FactoredAut exp_aut(const Derivation &D, const NilpotencyCertificate &cert,
                    const Scalar &t);

// equality of the underlying automorphisms (always via expansions)
bool equals(const PolyMap &a, const PolyMap &b);
bool equals(const FactoredAut &a, const FactoredAut &b);
bool equals(const FactoredAut &a, const PolyMap &b);

// Inverse by undetermined coefficients: find tau with compose(sigma, tau) =
// id, searching candidate degrees incrementally up to deg_bound (default
// deg(sigma)^(n-1), the classical inverse-degree bound). Both compositions
// are verified before returning. Failing at the bound reports
// NotInvertible-at-bound; it is not a proof of non-invertibility.
PolyMap invert(const PolyMap &sigma,
               std::optional<int> deg_bound = std::nullopt);

FactoredAut invert_word(const FactoredAut &w);
PolyMap invert(const FactoredAut &w);

} // namespace cremona
