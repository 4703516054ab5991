#include "cremona/derivation.hpp"

#include <algorithm>
#include <string>

#include "cremona/linalg.hpp"

namespace cremona {

namespace {

void check_arity(const Derivation &D, int n, const char *what) {
  if (D.vars() != n)
    fail(Errc::ArityMismatch, std::string(what) + ": derivation over " +
                                  std::to_string(D.vars()) +
                                  " variables, expected " + std::to_string(n));
}

} // namespace

Derivation::Derivation(int n, std::vector<Poly> images)
    : n_(n), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n_)
    fail(Errc::ArityMismatch, "derivation needs " + std::to_string(n_) +
                                  " images, got " +
                                  std::to_string(images_.size()));
  for (const auto &img : images_)
    if (img.vars() != n_)
      fail(Errc::ArityMismatch, "derivation image over wrong ring");
}

Derivation Derivation::zero(int n) {
  return Derivation(n, std::vector<Poly>(n, Poly::zero(n)));
}

Derivation Derivation::partial(int n, int i) {
  auto images = std::vector<Poly>(n, Poly::zero(n));
  if (i < 1 || i > n)
    fail(Errc::VariableOutOfRange, "D" + std::to_string(i));
  images[i - 1] = Poly::constant(n, Scalar(1));
  return Derivation(n, std::move(images));
}

Derivation Derivation::monomial(int n, Monomial m, const Scalar &c, int i) {
  if (i < 1 || i > n)
    fail(Errc::VariableOutOfRange, "D" + std::to_string(i));
  auto images = std::vector<Poly>(n, Poly::zero(n));
  images[i - 1] = Poly::monomial(n, std::move(m), c);
  return Derivation(n, std::move(images));
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const Poly &p) { return p.is_zero(); });
}

int Derivation::degree() const {
  int d = -1;
  for (const auto &img : images_) d = std::max(d, img.degree());
  return d;
}

Derivation Derivation::operator+(const Derivation &other) const {
  check_arity(other, n_, "derivation sum");
  std::vector<Poly> images;
  images.reserve(n_);
  for (int i = 0; i < n_; ++i) images.push_back(images_[i] + other.images_[i]);
  return Derivation(n_, std::move(images));
}

Derivation Derivation::operator-(const Derivation &other) const {
  check_arity(other, n_, "derivation difference");
  std::vector<Poly> images;
  images.reserve(n_);
  for (int i = 0; i < n_; ++i) images.push_back(images_[i] - other.images_[i]);
  return Derivation(n_, std::move(images));
}

Derivation Derivation::operator*(const Scalar &c) const {
  std::vector<Poly> images;
  images.reserve(n_);
  for (const auto &img : images_) images.push_back(img * c);
  return Derivation(n_, std::move(images));
}

bool Derivation::operator==(const Derivation &other) const {
  return n_ == other.n_ && images_ == other.images_;
}

Poly derive(const Derivation &D, const Poly &f) {
  check_arity(D, f.vars(), "derive");
  Poly r = Poly::zero(f.vars());
  for (int i = 1; i <= f.vars(); ++i) {
    if (D.image(i).is_zero()) continue;
    r += D.image(i) * f.partial(i);
  }
  return r;
}

Derivation commutator(const Derivation &P, const Derivation &Q) {
  check_arity(Q, P.vars(), "commutator");
  std::vector<Poly> images;
  images.reserve(P.vars());
  for (int i = 1; i <= P.vars(); ++i)
    images.push_back(derive(P, Q.image(i)) - derive(Q, P.image(i)));
  return Derivation(P.vars(), std::move(images));
}

bool kernel_member(const Derivation &D, const Poly &f) {
  check_arity(D, f.vars(), "kernel_member");
  return derive(D, f).is_zero();
}

NilpotencyCertificate
NilpotencyCertificate::make_proven(std::vector<int> orders) {
  NilpotencyCertificate c;
  c.kind = Kind::Proven;
  c.orders = std::move(orders);
  return c;
}

NilpotencyCertificate
NilpotencyCertificate::make_disproven(int witness, Refutation reason) {
  NilpotencyCertificate c;
  c.kind = Kind::Disproven;
  c.witness = witness;
  c.reason = reason;
  return c;
}

NilpotencyCertificate NilpotencyCertificate::make_unknown(int iter_bound,
                                                          int deg_bound) {
  NilpotencyCertificate c;
  c.kind = Kind::Unknown;
  c.iter_bound = iter_bound;
  c.deg_bound = deg_bound;
  return c;
}

namespace {

// D = c*x^a*D_i with a_i >= 1 is never locally nilpotent: each iterate on
// x_i is a single monomial with exponent k*a - (k-1)*e_i and a coefficient
// that is a product of positive integers.
bool monomial_refutation(const Derivation &D, int &witness) {
  int nonzero = 0, idx = 0;
  for (int i = 1; i <= D.vars(); ++i) {
    if (D.image(i).is_zero()) continue;
    ++nonzero;
    idx = i;
  }
  if (nonzero != 1) return false;
  const Poly &img = D.image(idx);
  if (img.term_count() != 1) return false;
  const Monomial &a = img.terms().begin()->first;
  if (a[idx - 1] == 0) return false;
  witness = idx;
  return true;
}

bool all_images_affine(const Derivation &D) {
  for (int i = 1; i <= D.vars(); ++i)
    if (D.image(i).degree() > 1) return false;
  return true;
}

// matrix of D on span{1, x1..xn}: row i holds the coordinates of D(basis_i)
QMatrix affine_action_matrix(const Derivation &D) {
  int n = D.vars();
  QMatrix B(n + 1, std::vector<Scalar>(n + 1, Scalar(0)));
  for (int i = 1; i <= n; ++i) {
    for (const auto &[m, c] : D.image(i).terms()) {
      unsigned d = mono_degree(m);
      if (d == 0) {
        B[i][0] = c;
      } else {
        for (int j = 0; j < n; ++j)
          if (m[j] == 1) B[i][j + 1] = c;
      }
    }
  }
  return B;
}

// true iff no variable can reach itself through the images of D
bool dependency_acyclic(const Derivation &D) {
  int n = D.vars();
  std::vector<std::vector<int>> adj(n);
  for (int i = 1; i <= n; ++i)
    for (const auto &[m, c] : D.image(i).terms())
      for (int j = 0; j < n; ++j)
        if (m[j] > 0) adj[i - 1].push_back(j);
  std::vector<int> state(n, 0); // 0 new, 1 open, 2 done
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int w : adj[v]) {
          if (state[w] == 1) return false;
          if (state[w] == 0) stack.push_back(w);
        }
      } else {
        if (state[v] == 1) state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

// iterate D on each generator; negative bounds mean unbounded
bool iterate_orders(const Derivation &D, long iter_bound, long deg_bound,
                    std::vector<int> &orders) {
  int n = D.vars();
  orders.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    Poly p = Poly::variable(n, i);
    int k = 0;
    while (!p.is_zero()) {
      if (iter_bound >= 0 && k >= iter_bound) return false;
      if (deg_bound >= 0 && p.degree() > deg_bound) return false;
      p = derive(D, p);
      ++k;
    }
    orders[i - 1] = k;
  }
  return true;
}

} // namespace

NilpotencyCertificate check_locally_nilpotent(const Derivation &D,
                                              int iter_bound, int deg_bound) {
  using Cert = NilpotencyCertificate;

  int witness = 0;
  if (monomial_refutation(D, witness))
    return Cert::make_disproven(witness, Cert::Refutation::MonomialCriterion);

  std::vector<int> orders;
  if (all_images_affine(D)) {
    QMatrix B = affine_action_matrix(D);
    QMatrix P = qmat_pow(B, D.vars() + 1);
    if (!qmat_is_zero(P)) {
      int w = 1;
      for (int i = 1; i <= D.vars(); ++i) {
        bool nonzero_row = false;
        for (const auto &e : P[i]) nonzero_row = nonzero_row || e != 0;
        if (nonzero_row) { w = i; break; }
      }
      return Cert::make_disproven(w, Cert::Refutation::LinearCriterion);
    }
    iterate_orders(D, -1, -1, orders); // terminates within n+2 steps
    return Cert::make_proven(std::move(orders));
  }

  if (dependency_acyclic(D)) {
    iterate_orders(D, -1, -1, orders); // triangular: termination guaranteed
    return Cert::make_proven(std::move(orders));
  }

  if (iterate_orders(D, iter_bound, deg_bound, orders))
    return Cert::make_proven(std::move(orders));
  return Cert::make_unknown(iter_bound, deg_bound);
}

std::pair<Derivation, NilpotencyCertificate>
scale_by_kernel(const Derivation &D, const NilpotencyCertificate &cert,
                const Poly &f) {
  check_arity(D, f.vars(), "scale_by_kernel");
  if (!cert.proven())
    fail(Errc::UncertifiedInput,
         "scale_by_kernel requires a Proven nilpotency certificate");
  if (!kernel_member(D, f))
    fail(Errc::NotInKernel, "scaling function is not in Ker D");

  std::vector<Poly> images;
  images.reserve(D.vars());
  for (int i = 1; i <= D.vars(); ++i) images.push_back(f * D.image(i));
  Derivation fd(D.vars(), std::move(images));

  std::vector<int> orders = cert.orders;
  if (f.is_zero()) orders.assign(D.vars(), 1);
  return {std::move(fd), NilpotencyCertificate::make_proven(std::move(orders))};
}

Poly exp_apply(const Derivation &D, const NilpotencyCertificate &cert,
               const Poly &f, const Scalar &t) {
  check_arity(D, f.vars(), "exp_apply");
  if (!cert.proven())
    fail(Errc::UncertifiedInput,
         "exp requires a Proven nilpotency certificate");
  Poly sum = f;
  Poly iterate = f;
  Scalar coeff(1);
  for (unsigned k = 1; !iterate.is_zero(); ++k) {
    iterate = derive(D, iterate);
    if (iterate.is_zero()) break;
    coeff *= t;
    coeff /= Scalar(static_cast<long>(k));
    if (coeff == 0) break; // t == 0
    sum += iterate * coeff;
  }
  return sum;
}

} // namespace cremona
