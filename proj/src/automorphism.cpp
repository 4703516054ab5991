#include "cremona/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace cremona {

PolyMap::PolyMap(int n, std::vector<Poly> images)
    : n_(n), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n_)
    fail(Errc::ArityMismatch, "map needs " + std::to_string(n_) +
                                  " components, got " +
                                  std::to_string(images_.size()));
  for (const auto &img : images_)
    if (img.vars() != n_)
      fail(Errc::ArityMismatch, "map component over wrong ring");
}

PolyMap PolyMap::identity(int n) {
  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) images.push_back(Poly::variable(n, i));
  return PolyMap(n, std::move(images));
}

int PolyMap::degree() const {
  int d = -1;
  for (const auto &img : images_) d = std::max(d, img.degree());
  return d;
}

bool PolyMap::is_identity() const { return *this == identity(n_); }

Poly apply_map(const PolyMap &sigma, const Poly &f) {
  if (f.vars() != sigma.vars())
    fail(Errc::ArityMismatch, "apply_map arity");
  return f.substitute(sigma.images());
}

PolyMap compose(const PolyMap &sigma, const PolyMap &tau) {
  if (sigma.vars() != tau.vars())
    fail(Errc::ArityMismatch, "compose arity");
  std::vector<Poly> images;
  images.reserve(tau.vars());
  for (int i = 1; i <= tau.vars(); ++i)
    images.push_back(tau.image(i).substitute(sigma.images()));
  return PolyMap(tau.vars(), std::move(images));
}

namespace {

// fraction-free elimination; divisions by the previous pivot are exact
Poly bareiss_det(std::vector<std::vector<Poly>> m, int n, int nvars) {
  if (n == 0) return Poly::constant(nvars, Scalar(1));
  int sign = 1;
  Poly prev = Poly::constant(nvars, Scalar(1));
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) { pivot = r; break; }
      if (pivot < 0) return Poly::zero(nvars);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        Poly q(nvars);
        if (!divide_exact(num, prev, q))
          fail(Errc::ArityMismatch, "internal: Bareiss division not exact");
        m[i][j] = std::move(q);
      }
      m[i][k] = Poly::zero(nvars);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

} // namespace

Poly jacobian_det(const PolyMap &sigma) {
  int n = sigma.vars();
  std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n, Poly::zero(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      jac[i - 1][j - 1] = sigma.image(j).partial(i);
  return bareiss_det(std::move(jac), n, n);
}

bool is_volume_preserving(const PolyMap &sigma) {
  return jacobian_det(sigma) == Poly::constant(sigma.vars(), Scalar(1));
}

Factor Factor::linear(QMatrix mat) {
  int n = static_cast<int>(mat.size());
  if (!qmat_is_square(mat) || n == 0)
    fail(Errc::ArityMismatch, "linear factor needs a nonempty square matrix");
  Scalar det = qmat_det(mat);
  if (det == 0) fail(Errc::SingularMatrix, "linear factor has det 0");
  return Factor(n, Linear{std::move(mat), std::move(det)});
}

Factor Factor::translation(std::vector<Scalar> shift) {
  int n = static_cast<int>(shift.size());
  if (n == 0) fail(Errc::ArityMismatch, "empty translation");
  return Factor(n, Translation{std::move(shift)});
}

Factor Factor::exp_lnd(const Scalar &t, Derivation d,
                       NilpotencyCertificate cert) {
  if (!cert.proven())
    fail(Errc::UncertifiedInput,
         "exp factor requires a Proven nilpotency certificate");
  int n = d.vars();
  return Factor(n, ExpLnd{t, std::move(d), std::move(cert)});
}

Factor::Kind Factor::kind() const {
  if (std::holds_alternative<Linear>(v_)) return Kind::Linear;
  if (std::holds_alternative<Translation>(v_)) return Kind::Translation;
  return Kind::ExpLnd;
}

PolyMap Factor::expand() const {
  std::vector<Poly> images;
  images.reserve(n_);
  if (const auto *lin = std::get_if<Linear>(&v_)) {
    for (int i = 0; i < n_; ++i) {
      Poly row = Poly::zero(n_);
      for (int j = 0; j < n_; ++j) {
        if (lin->mat[i][j] == 0) continue;
        row += Poly::variable(n_, j + 1) * lin->mat[i][j];
      }
      images.push_back(std::move(row));
    }
  } else if (const auto *tr = std::get_if<Translation>(&v_)) {
    for (int i = 0; i < n_; ++i)
      images.push_back(Poly::variable(n_, i + 1) +
                       Poly::constant(n_, tr->shift[i]));
  } else {
    const auto &e = std::get<ExpLnd>(v_);
    for (int i = 1; i <= n_; ++i)
      images.push_back(exp_apply(e.d, e.cert, Poly::variable(n_, i), e.t));
  }
  return PolyMap(n_, std::move(images));
}

Factor Factor::inverse() const {
  if (const auto *lin = std::get_if<Linear>(&v_)) {
    auto inv = qmat_inverse(lin->mat);
    // det != 0 by construction
    return Factor(n_, Linear{std::move(*inv), Scalar(1) / lin->det});
  }
  if (const auto *tr = std::get_if<Translation>(&v_)) {
    std::vector<Scalar> neg;
    neg.reserve(tr->shift.size());
    for (const auto &c : tr->shift) neg.push_back(-c);
    return Factor(n_, Translation{std::move(neg)});
  }
  const auto &e = std::get<ExpLnd>(v_);
  return Factor(n_, ExpLnd{-e.t, e.d, e.cert});
}

FactoredAut::FactoredAut(int n)
    : n_(n), cache_(std::make_shared<Cache>()) {}

FactoredAut::FactoredAut(int n, std::vector<Factor> word)
    : n_(n), word_(std::move(word)), cache_(std::make_shared<Cache>()) {
  for (const auto &f : word_)
    if (f.vars() != n_)
      fail(Errc::ArityMismatch, "word factor over wrong ring");
}

const PolyMap &FactoredAut::expand() const {
  std::call_once(cache_->once, [this] {
    PolyMap acc = PolyMap::identity(n_);
    for (const auto &f : word_) acc = compose(acc, f.expand());
    cache_->map = std::move(acc);
  });
  return *cache_->map;
}

FactoredAut FactoredAut::inverse() const {
  std::vector<Factor> rev;
  rev.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    rev.push_back(it->inverse());
  return FactoredAut(n_, std::move(rev));
}

FactoredAut compose(const FactoredAut &a, const FactoredAut &b) {
  if (a.vars() != b.vars()) fail(Errc::ArityMismatch, "compose arity");
  std::vector<Factor> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return FactoredAut(a.vars(), std::move(word));
}

FactoredAut exp_aut(const Derivation &D, const NilpotencyCertificate &cert,
                    const Scalar &t) {
  return FactoredAut(D.vars(), {Factor::exp_lnd(t, D, cert)});
}

bool equals(const PolyMap &a, const PolyMap &b) {
  if (a.vars() != b.vars()) fail(Errc::ArityMismatch, "equals arity");
  return a == b;
}

bool equals(const FactoredAut &a, const FactoredAut &b) {
  return equals(a.expand(), b.expand());
}

bool equals(const FactoredAut &a, const PolyMap &b) {
  return equals(a.expand(), b);
}

namespace {

// ascending enumeration of all monomials of the given total degree
void monomials_of_degree(int n, int deg, Monomial &current, int pos,
                         std::vector<Monomial> &out) {
  if (pos == n - 1) {
    current[pos] = static_cast<std::uint32_t>(deg);
    out.push_back(current);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    current[pos] = static_cast<std::uint32_t>(e);
    monomials_of_degree(n, deg - e, current, pos + 1, out);
  }
  current[pos] = 0;
}

// one row-echelon entry: a reduced polynomial plus its expression in the
// candidate monomials
struct AnsatzRow {
  Poly reduced;
  std::map<Monomial, Scalar, MonoGradedLexGreater> coords;
};

// subtract multiples of existing rows until the leading monomial is new
void reduce_against(std::map<Monomial, AnsatzRow, MonoGradedLexGreater> &rows,
                    Poly &p,
                    std::map<Monomial, Scalar, MonoGradedLexGreater> &coords) {
  while (!p.is_zero()) {
    auto it = rows.find(p.leading_monomial());
    if (it == rows.end()) return;
    Scalar factor = p.leading_coefficient() /
                    it->second.reduced.leading_coefficient();
    p -= it->second.reduced * factor;
    for (const auto &[mono, c] : it->second.coords) {
      Scalar delta = -factor * c;
      auto [cit, inserted] = coords.try_emplace(mono, delta);
      if (!inserted) {
        cit->second += delta;
        if (cit->second == 0) coords.erase(cit);
      }
    }
  }
}

} // namespace

PolyMap invert(const PolyMap &sigma, std::optional<int> deg_bound) {
  int n = sigma.vars();
  Poly det = jacobian_det(sigma);
  if (!det.is_constant() || det.is_zero())
    fail(Errc::JacobianNotConstant,
         "Jacobian determinant is " + format_poly(det) +
             "; inversion requires a nonzero constant");

  int bound = deg_bound.value_or(0);
  if (bound <= 0) {
    // classical bound deg(sigma)^(n-1) on the degree of the inverse
    long b = 1;
    for (int k = 1; k < n; ++k) b *= std::max(sigma.degree(), 1);
    bound = static_cast<int>(std::min<long>(b, 1 << 20));
  }

  // row echelon over the span of sigma^a, with bookkeeping in the candidate
  // exponents a; processing degrees incrementally lets small inverses stop
  // long before the worst-case bound
  std::map<Monomial, AnsatzRow, MonoGradedLexGreater> rows;
  std::map<Monomial, Poly, MonoGradedLexGreater> power_cache;
  power_cache.emplace(Monomial(n, 0), Poly::constant(n, Scalar(1)));

  std::function<const Poly &(const Monomial &)> sigma_power =
      [&](const Monomial &a) -> const Poly & {
    auto it = power_cache.find(a);
    if (it != power_cache.end()) return it->second;
    Monomial prev = a;
    int j = 0;
    while (prev[j] == 0) ++j;
    prev[j] -= 1;
    const Poly &base = sigma_power(prev);
    return power_cache.emplace(a, base * sigma.image(j + 1)).first->second;
  };

  std::vector<std::optional<Poly>> solved(n);
  auto try_solve = [&](int i) -> bool {
    Poly target = Poly::variable(n, i + 1);
    std::map<Monomial, Scalar, MonoGradedLexGreater> coords;
    reduce_against(rows, target, coords);
    if (!target.is_zero()) return false;
    // 0 = x_i + sum coords[a] * sigma^a, so x_i = sum (-coords[a]) * sigma^a
    Poly component(n);
    for (const auto &[mono, c] : coords) component.add_term(mono, -c);
    solved[i] = std::move(component);
    return true;
  };

  int remaining = n;
  for (int d = 0; d <= bound && remaining > 0; ++d) {
    std::vector<Monomial> candidates;
    Monomial scratch(n, 0);
    monomials_of_degree(n, d, scratch, 0, candidates);
    for (const auto &a : candidates) {
      Poly p = sigma_power(a);
      std::map<Monomial, Scalar, MonoGradedLexGreater> coords;
      coords.emplace(a, Scalar(1));
      reduce_against(rows, p, coords);
      if (p.is_zero()) continue;
      Monomial lead = p.leading_monomial();
      rows.emplace(std::move(lead), AnsatzRow{std::move(p), std::move(coords)});
    }
    for (int i = 0; i < n; ++i)
      if (!solved[i] && try_solve(i)) --remaining;
  }

  if (remaining > 0)
    fail(Errc::NotInvertible,
         "no polynomial inverse of degree <= " + std::to_string(bound) +
             " exists; this bounded failure is not a proof of "
             "non-invertibility");

  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(std::move(*solved[i]));
  PolyMap tau(n, std::move(images));

  if (!compose(sigma, tau).is_identity() || !compose(tau, sigma).is_identity())
    fail(Errc::NotInvertible,
         "candidate inverse failed the two-sided composition check");
  return tau;
}

FactoredAut invert_word(const FactoredAut &w) { return w.inverse(); }

PolyMap invert(const FactoredAut &w) { return invert_word(w).expand(); }

} // namespace cremona
