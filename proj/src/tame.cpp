#include "cremona/tame.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cremona/parse.hpp"

namespace cremona {

namespace {

bool poly_uses_var(const Poly &f, int i) {
  for (const auto &[m, c] : f.terms())
    if (m[i - 1] > 0) return true;
  return false;
}

Factor elementary_factor(int n, int i, const Poly &f) {
  if (f.vars() != n) fail(Errc::ArityMismatch, "elementary polynomial arity");
  if (i < 1 || i > n) fail(Errc::VariableOutOfRange, "x" + std::to_string(i));
  if (poly_uses_var(f, i))
    fail(Errc::VariableDependenceViolation,
         "elementary factor on x" + std::to_string(i) +
             " must not depend on x" + std::to_string(i));
  std::vector<Poly> images(n, Poly::zero(n));
  images[i - 1] = f;
  Derivation d(n, std::move(images));
  auto cert = check_locally_nilpotent(d);
  return Factor::exp_lnd(Scalar(1), std::move(d), std::move(cert));
}

} // namespace

FactoredAut mk_translation(const std::vector<Scalar> &c) {
  int n = static_cast<int>(c.size());
  if (n == 0) fail(Errc::ArityMismatch, "empty translation");
  std::vector<Factor> word;
  for (int i = 1; i <= n; ++i) {
    if (c[i - 1] == 0) continue;
    Derivation d = Derivation::partial(n, i);
    auto cert = check_locally_nilpotent(d);
    word.push_back(Factor::exp_lnd(c[i - 1], std::move(d), std::move(cert)));
  }
  return FactoredAut(n, std::move(word));
}

FactoredAut mk_linear(QMatrix mat) {
  int n = static_cast<int>(mat.size());
  Factor f = Factor::linear(std::move(mat)); // rejects singular input
  return FactoredAut(n, {std::move(f)});
}

FactoredAut mk_elementary(int n, int i, const Poly &f) {
  return FactoredAut(n, {elementary_factor(n, i, f)});
}

FactoredAut mk_triangular(const std::vector<Poly> &f) {
  int n = static_cast<int>(f.size()) + 1;
  std::vector<Factor> word;
  word.reserve(f.size());
  for (int i = 1; i < n; ++i) {
    const Poly &fi = f[i - 1];
    if (fi.vars() != n) fail(Errc::ArityMismatch, "triangular polynomial arity");
    for (int j = 1; j <= i; ++j)
      if (poly_uses_var(fi, j))
        fail(Errc::VariableDependenceViolation,
             "triangular component " + std::to_string(i) +
                 " must live in k[x" + std::to_string(i + 1) + "..x" +
                 std::to_string(n) + "]");
    if (fi.is_zero()) continue;
    word.push_back(elementary_factor(n, i, fi));
  }
  return FactoredAut(n, std::move(word));
}

FactoredAut sl_decompose(const QMatrix &mat) {
  int n = static_cast<int>(mat.size());
  if (n == 0 || !qmat_is_square(mat))
    fail(Errc::ArityMismatch, "sl_decompose needs a square matrix");
  if (qmat_det(mat) != 1)
    fail(Errc::DeterminantNotOne, "matrix determinant is not 1");

  struct RowOp {
    int target, source; // R_target += t * R_source
    Scalar t;
  };
  std::vector<RowOp> ops;
  QMatrix w = mat;
  auto apply = [&](int r, int k, const Scalar &t) {
    if (t == 0) return;
    for (int j = 0; j < n; ++j) w[r][j] += t * w[k][j];
    ops.push_back({r, k, t});
  };

  for (int k = 0; k < n; ++k) {
    if (w[k][k] != 1) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[i][k] != 0) { r = i; break; }
      if (r >= 0) {
        apply(k, r, (Scalar(1) - w[k][k]) / w[r][k]);
      } else {
        // pivot != 1 with zeros below: create a helper entry, then fold it in
        // (the last pivot is forced to 1 by the determinant, so k+1 < n here)
        Scalar p = w[k][k];
        if (p == 0 || k + 1 >= n)
          fail(Errc::SingularMatrix, "internal: elimination invariant broken");
        apply(k + 1, k, (Scalar(1) - p) / p);
        apply(k, k + 1, Scalar(1));
      }
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || w[r][k] == 0) continue;
      apply(r, k, -w[r][k]);
    }
  }

  std::vector<Factor> word;
  word.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    // inverse of R_r += t*R_k is the transvection exp(-t * x_{k+1} D_{r+1})
    Derivation d = Derivation::monomial(
        n, [&] { Monomial m(n, 0); m[it->source] = 1; return m; }(), Scalar(1),
        it->target + 1);
    auto cert = check_locally_nilpotent(d);
    word.push_back(Factor::exp_lnd(-it->t, std::move(d), std::move(cert)));
  }
  return FactoredAut(n, std::move(word));
}

FactoredAut nagata() {
  const int n = 3;
  Derivation d(n, {parse_poly("-2*x2", n), parse_poly("x3", n), Poly::zero(n)});
  auto cert = check_locally_nilpotent(d);
  Poly f = parse_poly("x3*x1 + x2^2", n);
  auto [fd, fd_cert] = scale_by_kernel(d, cert, f);
  return FactoredAut(
      n, {Factor::exp_lnd(Scalar(1), std::move(fd), std::move(fd_cert))});
}

namespace {

// P_bar == c * Q_bar^k for the unique candidate c; empty if not proportional
bool leading_power_match(const Poly &p_bar, const Poly &q_bar, unsigned k,
                         Scalar &c_out) {
  Poly qk = q_bar.pow(k);
  Scalar c = p_bar.leading_coefficient() / qk.leading_coefficient();
  if (p_bar == qk * c) {
    c_out = c;
    return true;
  }
  return false;
}

} // namespace

FactoredAut jung_vdk_decompose(const PolyMap &sigma) {
  if (sigma.vars() != 2)
    fail(Errc::ArityMismatch, "plane decomposition needs n = 2");
  Poly det = jacobian_det(sigma);
  if (!det.is_constant() || det.is_zero())
    fail(Errc::NotAnAutomorphism,
         "Jacobian determinant is " + format_poly(det) +
             ", not a nonzero constant");

  const int n = 2;
  Poly p = sigma.image(1), q = sigma.image(2);
  std::vector<Factor> peeled;

  while (std::max(p.degree(), q.degree()) > 1) {
    int dp = p.degree(), dq = q.degree();
    if (dp < 1 || dq < 1)
      fail(Errc::NotAnAutomorphism, "degenerate component during reduction");

    bool reduced = false;
    // cancellation into the first component, tried first on degree ties
    if (dp >= dq && dp % dq == 0) {
      Scalar c;
      if (leading_power_match(p.leading_form(), q.leading_form(),
                              static_cast<unsigned>(dp / dq), c)) {
        unsigned k = static_cast<unsigned>(dp / dq);
        p -= q.pow(k) * c;
        Poly f = Poly::monomial(n, {0, k}, c);
        peeled.push_back(elementary_factor(n, 1, f));
        reduced = true;
      }
    }
    if (!reduced && dq >= dp && dq % dp == 0) {
      Scalar c;
      if (leading_power_match(q.leading_form(), p.leading_form(),
                              static_cast<unsigned>(dq / dp), c)) {
        unsigned k = static_cast<unsigned>(dq / dp);
        q -= p.pow(k) * c;
        Poly f = Poly::monomial(n, {k, 0}, c);
        peeled.push_back(elementary_factor(n, 2, f));
        reduced = true;
      }
    }
    if (!reduced)
      fail(Errc::NotAnAutomorphism,
           "no leading-form cancellation at degrees (" + std::to_string(dp) +
               ", " + std::to_string(dq) + ")");
  }

  // affine residue: x_i -> sum_j A[i][j] x_j + c_i
  QMatrix a(n, std::vector<Scalar>(n, Scalar(0)));
  std::vector<Scalar> shift(n, Scalar(0));
  const Poly *comps[2] = {&p, &q};
  for (int i = 0; i < n; ++i) {
    for (const auto &[m, c] : comps[i]->terms()) {
      unsigned d = mono_degree(m);
      if (d == 0) {
        shift[i] = c;
      } else {
        for (int j = 0; j < n; ++j)
          if (m[j] == 1) a[i][j] = c;
      }
    }
  }
  if (qmat_det(a) == 0)
    fail(Errc::NotAnAutomorphism, "affine residue is singular");

  std::vector<Factor> word;
  if (a != qmat_identity(n)) word.push_back(Factor::linear(std::move(a)));
  if (std::any_of(shift.begin(), shift.end(),
                  [](const Scalar &c) { return c != 0; }))
    word.push_back(Factor::translation(std::move(shift)));
  word.insert(word.end(), peeled.rbegin(), peeled.rend());
  return FactoredAut(n, std::move(word));
}

} // namespace cremona
