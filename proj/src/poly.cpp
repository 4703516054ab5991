#include "cremona/poly.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace cremona {

namespace {

std::atomic<std::size_t> g_max_terms{1000000};

void check_term_cap(std::size_t count) {
  if (count > g_max_terms.load(std::memory_order_relaxed))
    fail(Errc::TermLimit, "polynomial exceeds " +
                              std::to_string(g_max_terms.load()) +
                              " terms (see CREMONA_MAX_TERMS)");
}

void check_arity(const Poly &f, const Poly &g) {
  if (f.vars() != g.vars())
    fail(Errc::ArityMismatch,
         "polynomials over " + std::to_string(f.vars()) + " and " +
             std::to_string(g.vars()) + " variables");
}

} // namespace

std::size_t max_poly_terms() { return g_max_terms.load(); }
void set_max_poly_terms(std::size_t cap) { g_max_terms.store(cap ? cap : 1); }

unsigned mono_degree(const Monomial &m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool MonoGradedLexGreater::operator()(const Monomial &a,
                                      const Monomial &b) const {
  unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Poly Poly::constant(int n, const Scalar &c) {
  Poly p(n);
  if (c != 0) p.terms_.emplace(Monomial(n, 0), c);
  return p;
}

Poly Poly::variable(int n, int i) {
  if (i < 1 || i > n)
    fail(Errc::VariableOutOfRange,
         "x" + std::to_string(i) + " with " + std::to_string(n) + " variables");
  Monomial m(n, 0);
  m[i - 1] = 1;
  Poly p(n);
  p.terms_.emplace(std::move(m), Scalar(1));
  return p;
}

Poly Poly::monomial(int n, Monomial m, const Scalar &c) {
  if (static_cast<int>(m.size()) != n)
    fail(Errc::ArityMismatch, "monomial length != variable count");
  Poly p(n);
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

Scalar Poly::constant_term() const {
  Monomial one(n_, 0);
  auto it = terms_.find(one);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(mono_degree(terms_.begin()->first));
}

Poly Poly::leading_form() const {
  Poly r(n_);
  if (terms_.empty()) return r;
  unsigned d = mono_degree(terms_.begin()->first);
  for (const auto &[m, c] : terms_) {
    if (mono_degree(m) != d) break; // graded order: top degree is a prefix
    r.terms_.emplace(m, c);
  }
  return r;
}

const Monomial &Poly::leading_monomial() const { return terms_.begin()->first; }
const Scalar &Poly::leading_coefficient() const { return terms_.begin()->second; }

void Poly::add_term(const Monomial &m, const Scalar &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly &Poly::operator+=(const Poly &g) {
  check_arity(*this, g);
  for (const auto &[m, c] : g.terms_) add_term(m, c);
  check_term_cap(terms_.size());
  return *this;
}

Poly &Poly::operator-=(const Poly &g) {
  check_arity(*this, g);
  for (const auto &[m, c] : g.terms_) add_term(m, -c);
  check_term_cap(terms_.size());
  return *this;
}

Poly operator*(const Poly &f, const Poly &g) {
  check_arity(f, g);
  Poly r(f.n_);
  for (const auto &[ma, ca] : f.terms_) {
    for (const auto &[mb, cb] : g.terms_)
      r.add_term(mono_mul(ma, mb), ca * cb);
    check_term_cap(r.terms_.size());
  }
  return r;
}

Poly operator*(const Poly &f, const Scalar &c) {
  Poly r(f.n_);
  if (c == 0) return r;
  for (const auto &[m, k] : f.terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(n_, Scalar(1));
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::partial(int i) const {
  if (i < 1 || i > n_)
    fail(Errc::VariableOutOfRange,
         "d/dx" + std::to_string(i) + " with " + std::to_string(n_) +
             " variables");
  Poly r(n_);
  for (const auto &[m, c] : terms_) {
    if (m[i - 1] == 0) continue;
    Monomial d = m;
    d[i - 1] -= 1;
    r.add_term(d, c * Scalar(static_cast<long>(m[i - 1])));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly> &images) const {
  if (static_cast<int>(images.size()) != n_)
    fail(Errc::ArityMismatch, "substitution expects " + std::to_string(n_) +
                                  " images, got " +
                                  std::to_string(images.size()));
  int m = images.empty() ? 0 : images[0].vars();
  for (const auto &img : images)
    if (img.vars() != m)
      fail(Errc::ArityMismatch, "substitution images over different rings");

  // ladder of cached powers, one per variable
  std::vector<std::vector<Poly>> pows(n_);
  auto power = [&](int i, unsigned e) -> const Poly & {
    auto &ladder = pows[i];
    if (ladder.empty()) ladder.push_back(images[i]); // ladder[k] = images[i]^(k+1)
    while (ladder.size() < e) ladder.push_back(ladder.back() * images[i]);
    return ladder[e - 1];
  };

  Poly result(m);
  for (const auto &[mono, c] : terms_) {
    Poly prod = Poly::constant(m, c);
    for (int i = 0; i < n_; ++i)
      if (mono[i] > 0) prod *= power(i, mono[i]);
    result += prod;
  }
  return result;
}

bool divide_exact(const Poly &f, const Poly &g, Poly &quotient) {
  check_arity(f, g);
  if (g.is_zero()) return false;
  Poly q(f.vars());
  Poly r = f;
  const Monomial &lg = g.leading_monomial();
  while (!r.is_zero()) {
    const Monomial &lr = r.leading_monomial();
    Monomial d(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lg[i]) return false;
      d[i] = lr[i] - lg[i];
    }
    Scalar c = r.leading_coefficient() / g.leading_coefficient();
    Poly t = Poly::monomial(f.vars(), d, c);
    q += t;
    r -= t * g;
  }
  quotient = std::move(q);
  return true;
}

std::string format_poly(const Poly &f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : f.terms()) {
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += 'x';
      vars += std::to_string(i + 1);
      if (m[i] > 1) {
        vars += '^';
        vars += std::to_string(m[i]);
      }
    }
    if (vars.empty()) {
      out << format_scalar(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << format_scalar(mag) << '*' << vars;
    }
  }
  return out.str();
}

} // namespace cremona
