#include "cremona/torus.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

namespace cremona {

Weight Weight::from_raw(std::vector<std::int64_t> v) {
  Weight w;
  if (!v.empty()) {
    std::int64_t mn = *std::min_element(v.begin(), v.end());
    for (auto &e : v) e -= mn;
  }
  w.rep_ = std::move(v);
  return w;
}

bool Weight::is_trivial() const {
  return std::all_of(rep_.begin(), rep_.end(),
                     [](std::int64_t e) { return e == 0; });
}

Scalar Weight::evaluate(const std::vector<Scalar> &entries) const {
  if (entries.size() != rep_.size())
    fail(Errc::ArityMismatch, "weight evaluation arity");
  Scalar r(1);
  for (std::size_t i = 0; i < rep_.size(); ++i)
    r *= scalar_pow(entries[i], rep_[i]);
  return r;
}

std::string Weight::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (i) out << ',';
    out << rep_[i];
  }
  out << ')';
  return out.str();
}

TorusElement TorusElement::symbolic(int n) { return TorusElement(n, {}); }

TorusElement TorusElement::concrete(std::vector<Scalar> entries) {
  if (entries.empty()) fail(Errc::ArityMismatch, "empty torus element");
  Scalar prod(1);
  for (const auto &e : entries) {
    if (e == 0) fail(Errc::NotInTorus, "torus entries must be nonzero");
    prod *= e;
  }
  if (prod != 1)
    fail(Errc::NotInTorus,
         "product of torus entries is " + format_scalar(prod) + ", not 1");
  int n = static_cast<int>(entries.size());
  return TorusElement(n, std::move(entries));
}

TorusElement TorusElement::identity(int n) {
  return TorusElement(n, std::vector<Scalar>(n, Scalar(1)));
}

LaurentPoly LaurentPoly::monomial(std::vector<std::int64_t> e,
                                  const Scalar &c) {
  LaurentPoly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

void LaurentPoly::add_term(const std::vector<std::int64_t> &e,
                           const Scalar &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator*(const Scalar &c) const {
  LaurentPoly r(params_);
  if (c == 0) return r;
  for (const auto &[e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
  for (const auto &[e, c] : other.terms_) add_term(e, c);
  return *this;
}

Scalar LaurentPoly::evaluate(const std::vector<Scalar> &params) const {
  if (static_cast<int>(params.size()) != params_)
    fail(Errc::ArityMismatch, "Laurent evaluation arity");
  Scalar r(0);
  for (const auto &[e, c] : terms_) {
    Scalar term = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      term *= scalar_pow(params[j], e[j]);
    r += term;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string vars;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += 't' + std::to_string(j + 1);
      if (e[j] != 1) vars += '^' + std::to_string(e[j]);
    }
    if (vars.empty()) {
      out << format_scalar(c);
    } else if (c == 1) {
      out << vars;
    } else {
      out << format_scalar(c) << '*' << vars;
    }
  }
  return out.str();
}

std::vector<std::int64_t>
reduce_character(const std::vector<std::int64_t> &v) {
  std::vector<std::int64_t> w(v.size() - 1);
  for (std::size_t j = 0; j + 1 < v.size(); ++j) w[j] = v[j] - v.back();
  return w;
}

void ParamPoly::add_term(const Monomial &m, const LaurentPoly &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ParamPoly::accumulate(const Poly &p, const LaurentPoly &coeff) {
  if (coeff.is_zero()) return;
  for (const auto &[m, c] : p.terms()) add_term(m, coeff * c);
}

Poly ParamPoly::evaluate(const std::vector<Scalar> &params) const {
  Poly r(n_);
  for (const auto &[m, c] : terms_) r.add_term(m, c.evaluate(params));
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.str() << ")*" << format_poly(Poly::monomial(n_, m, Scalar(1)));
  }
  return out.str();
}

ParamDerivation::ParamDerivation(int n, std::vector<ParamPoly> images)
    : n_(n), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n_)
    fail(Errc::ArityMismatch, "parametric derivation arity");
}

Derivation ParamDerivation::evaluate(const std::vector<Scalar> &entries) const {
  TorusElement::concrete(entries); // validate
  std::vector<Scalar> params(entries.begin(), entries.end() - 1);
  std::vector<Poly> images;
  images.reserve(n_);
  for (const auto &img : images_) images.push_back(img.evaluate(params));
  return Derivation(n_, std::move(images));
}

Derivation conj_by_torus_concrete(const Derivation &D,
                                  const std::vector<Scalar> &entries) {
  TorusElement::concrete(entries); // validate
  int n = D.vars();
  if (static_cast<int>(entries.size()) != n)
    fail(Errc::ArityMismatch, "torus element arity");
  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Poly img(n);
    for (const auto &[m, c] : D.image(i).terms()) {
      Scalar factor = c;
      for (int j = 0; j < n; ++j)
        factor *= scalar_pow(entries[j], static_cast<std::int64_t>(m[j]) -
                                             (j == i - 1 ? 1 : 0));
      img.add_term(m, factor);
    }
    images.push_back(std::move(img));
  }
  return Derivation(n, std::move(images));
}

ParamDerivation conj_by_torus_symbolic(const Derivation &D) {
  int n = D.vars();
  std::vector<ParamPoly> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) {
    ParamPoly img(n);
    for (const auto &[m, c] : D.image(i).terms()) {
      std::vector<std::int64_t> chi(n);
      for (int j = 0; j < n; ++j)
        chi[j] = static_cast<std::int64_t>(m[j]) - (j == i - 1 ? 1 : 0);
      img.add_term(m, LaurentPoly::monomial(reduce_character(chi), c));
    }
    images.push_back(std::move(img));
  }
  return ParamDerivation(n, std::move(images));
}

std::variant<Derivation, ParamDerivation>
conj_by_torus(const Derivation &D, const TorusElement &s) {
  if (s.vars() != D.vars()) fail(Errc::ArityMismatch, "conj_by_torus arity");
  if (s.is_symbolic()) return conj_by_torus_symbolic(D);
  return conj_by_torus_concrete(D, s.entries());
}

std::vector<std::pair<Weight, Derivation>>
weight_decompose(const Derivation &D) {
  int n = D.vars();
  std::map<Weight, std::vector<std::pair<Monomial, std::pair<Scalar, int>>>>
      buckets;
  for (int i = 1; i <= n; ++i) {
    for (const auto &[m, c] : D.image(i).terms()) {
      std::vector<std::int64_t> raw(n);
      for (int j = 0; j < n; ++j)
        raw[j] = static_cast<std::int64_t>(m[j]) - (j == i - 1 ? 1 : 0);
      buckets[Weight::from_raw(std::move(raw))].push_back({m, {c, i}});
    }
  }
  std::vector<std::pair<Weight, Derivation>> result;
  result.reserve(buckets.size());
  for (const auto &[w, terms] : buckets) {
    std::vector<Poly> images(n, Poly::zero(n));
    for (const auto &[m, ci] : terms) images[ci.second - 1].add_term(m, ci.first);
    result.emplace_back(w, Derivation(n, std::move(images)));
  }
  return result;
}

const char *root_rejection_name(RootRejection::Kind k) {
  switch (k) {
  case RootRejection::Kind::NotHomogeneous: return "NotHomogeneous";
  case RootRejection::Kind::TrivialCharacter: return "TrivialCharacter";
  case RootRejection::Kind::NotLocallyNilpotent: return "NotLocallyNilpotent";
  case RootRejection::Kind::NilpotencyUnknown: return "NilpotencyUnknown";
  }
  return "RootRejection";
}

std::variant<Weight, RootRejection>
is_root_vector(const Derivation &D, int iter_bound, int deg_bound) {
  auto components = weight_decompose(D);
  if (components.size() != 1)
    return RootRejection{RootRejection::Kind::NotHomogeneous,
                         std::to_string(components.size()) +
                             " weight components"};
  const Weight &w = components.front().first;
  if (w.is_trivial())
    return RootRejection{RootRejection::Kind::TrivialCharacter,
                         "weight class is trivial"};
  auto cert = check_locally_nilpotent(D, iter_bound, deg_bound);
  if (cert.kind == NilpotencyCertificate::Kind::Disproven)
    return RootRejection{
        RootRejection::Kind::NotLocallyNilpotent,
        std::string("witness x") + std::to_string(cert.witness) + ", " +
            (cert.reason == NilpotencyCertificate::Refutation::MonomialCriterion
                 ? "monomial criterion"
                 : "linear criterion")};
  if (cert.kind == NilpotencyCertificate::Kind::Unknown)
    return RootRejection{RootRejection::Kind::NilpotencyUnknown,
                         "bounds iter=" + std::to_string(cert.iter_bound) +
                             " deg=" + std::to_string(cert.deg_bound) +
                             " exhausted"};
  return w;
}

namespace {

void monomials_up_to_degree(int n, int max_deg, Monomial &current, int pos,
                            int used, std::vector<Monomial> &out) {
  if (pos == n) {
    out.push_back(current);
    return;
  }
  for (int e = 0; used + e <= max_deg; ++e) {
    current[pos] = static_cast<std::uint32_t>(e);
    monomials_up_to_degree(n, max_deg, current, pos + 1, used + e, out);
  }
  current[pos] = 0;
}

} // namespace

std::vector<std::pair<Weight, std::vector<Derivation>>>
enumerate_monomial_root_vectors(int n, int max_deg, int jobs) {
  if (n < 2) fail(Errc::ArityMismatch, "enumeration needs n >= 2");
  if (max_deg < 0) fail(Errc::ArityMismatch, "max_deg must be >= 0");

  // candidates x^a D_i with a_i = 0: exactly the locally nilpotent monomial
  // derivations; per-variable chunks keep the merge deterministic
  auto chunk = [&](int i) {
    std::vector<std::pair<Weight, Derivation>> found;
    std::vector<Monomial> monos;
    Monomial scratch(n, 0);
    monomials_up_to_degree(n, max_deg, scratch, 0, 0, monos);
    for (const auto &a : monos) {
      if (a[i - 1] != 0) continue;
      std::vector<std::int64_t> raw(n);
      for (int j = 0; j < n; ++j)
        raw[j] = static_cast<std::int64_t>(a[j]) - (j == i - 1 ? 1 : 0);
      found.emplace_back(Weight::from_raw(std::move(raw)),
                         Derivation::monomial(n, a, Scalar(1), i));
    }
    return found;
  };

  std::vector<std::vector<std::pair<Weight, Derivation>>> parts(n);
  if (jobs > 1) {
    std::vector<std::future<std::vector<std::pair<Weight, Derivation>>>> futs;
    futs.reserve(n);
    for (int i = 1; i <= n; ++i)
      futs.push_back(std::async(std::launch::async, chunk, i));
    for (int i = 0; i < n; ++i) parts[i] = futs[i].get();
  } else {
    for (int i = 1; i <= n; ++i) parts[i - 1] = chunk(i);
  }

  std::map<Weight, std::vector<Derivation>> grouped;
  for (const auto &part : parts)
    for (const auto &[w, d] : part) grouped[w].push_back(d);
  std::vector<std::pair<Weight, std::vector<Derivation>>> result;
  result.reserve(grouped.size());
  for (auto &[w, ds] : grouped) result.emplace_back(w, std::move(ds));
  return result;
}

namespace {

// sigma . tau . sigma^{-1} for the generic diagonal tau, image by image
std::vector<ParamPoly> torus_conjugate_images(const FactoredAut &sigma) {
  int n = sigma.vars();
  const PolyMap &fwd = sigma.expand();
  const PolyMap &inv = sigma.inverse().expand();

  std::map<Monomial, Poly, MonoGradedLexGreater> power_cache;
  power_cache.emplace(Monomial(n, 0), Poly::constant(n, Scalar(1)));
  std::function<const Poly &(const Monomial &)> fwd_power =
      [&](const Monomial &a) -> const Poly & {
    auto it = power_cache.find(a);
    if (it != power_cache.end()) return it->second;
    Monomial prev = a;
    int j = 0;
    while (prev[j] == 0) ++j;
    prev[j] -= 1;
    const Poly &base = fwd_power(prev);
    return power_cache.emplace(a, base * fwd.image(j + 1)).first->second;
  };

  std::vector<ParamPoly> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    ParamPoly acc(n);
    // tau applied to sigma^{-1}(x_i) scales each x^a by t^a; then apply sigma
    for (const auto &[a, c] : inv.image(i).terms()) {
      std::vector<std::int64_t> chi(a.begin(), a.end());
      LaurentPoly coeff =
          LaurentPoly::monomial(reduce_character(chi), c);
      acc.accumulate(fwd_power(a), coeff);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

} // namespace

bool centralizes_torus(const FactoredAut &sigma) {
  int n = sigma.vars();
  auto conj = torus_conjugate_images(sigma);
  for (int i = 1; i <= n; ++i) {
    ParamPoly expected(n);
    std::vector<std::int64_t> chi(n, 0);
    chi[i - 1] = 1;
    Monomial xi(n, 0);
    xi[i - 1] = 1;
    expected.add_term(xi, LaurentPoly::monomial(reduce_character(chi), Scalar(1)));
    if (!(conj[i - 1] == expected)) return false;
  }
  return true;
}

bool normalizes_torus(const FactoredAut &sigma) {
  int n = sigma.vars();
  auto conj = torus_conjugate_images(sigma);
  for (int i = 0; i < n; ++i) {
    if (conj[i].terms().size() != 1) return false;
    const auto &[mono, coeff] = *conj[i].terms().begin();
    // a single variable to the first power, with a one-term Laurent coefficient
    if (mono_degree(mono) != 1) return false;
    if (!coeff.is_single_term()) return false;
  }
  return true;
}

} // namespace cremona
