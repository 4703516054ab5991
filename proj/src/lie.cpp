#include "cremona/lie.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cremona {

namespace {

// coefficient-vector coordinates of a derivation: one entry per
// (image index, monomial) pair
using Coord = std::pair<int, Monomial>;

struct CoordLess {
  bool operator()(const Coord &a, const Coord &b) const {
    if (a.first != b.first) return a.first < b.first;
    return MonoGradedLexGreater{}(a.second, b.second);
  }
};

using SparseVec = std::map<Coord, Scalar, CoordLess>;

SparseVec to_vec(const Derivation &d) {
  SparseVec v;
  for (int i = 1; i <= d.vars(); ++i)
    for (const auto &[m, c] : d.image(i).terms()) v.emplace(Coord{i, m}, c);
  return v;
}

class Echelon {
public:
  // reduce v against the stored rows; v ends zero iff it was in the span
  void reduce(SparseVec &v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.begin()->first);
      if (it == rows_.end()) return;
      Scalar factor = v.begin()->second / it->second.begin()->second;
      for (const auto &[coord, c] : it->second) {
        auto [vit, inserted] = v.try_emplace(coord, -factor * c);
        if (!inserted) {
          vit->second -= factor * c;
          if (vit->second == 0) v.erase(vit);
        }
      }
    }
  }

  void insert(SparseVec v) {
    Coord lead = v.begin()->first;
    rows_.emplace(std::move(lead), std::move(v));
  }

private:
  std::map<Coord, SparseVec, CoordLess> rows_;
};

} // namespace

bool DerivationSpan::contains(const Derivation &d) const {
  if (d.vars() != n && !basis.empty())
    fail(Errc::ArityMismatch, "span membership arity");
  Echelon ech;
  for (const auto &b : basis) {
    SparseVec v = to_vec(b);
    ech.reduce(v);
    if (!v.empty()) ech.insert(std::move(v));
  }
  SparseVec v = to_vec(d);
  ech.reduce(v);
  return v.empty();
}

DerivationSpan span_reduce(const std::vector<Derivation> &gens) {
  DerivationSpan span;
  if (gens.empty()) return span;
  span.n = gens.front().vars();
  Echelon ech;
  for (const auto &g : gens) {
    if (g.vars() != span.n) fail(Errc::ArityMismatch, "span_reduce arity");
    span.max_deg_seen = std::max(span.max_deg_seen, g.degree());
    SparseVec v = to_vec(g);
    ech.reduce(v);
    if (v.empty()) continue;
    ech.insert(std::move(v));
    span.basis.push_back(g);
  }
  return span;
}

LieClosureResult lie_closure(const Derivation &P, const Derivation &Q,
                             int max_dim, int max_deg) {
  if (P.vars() != Q.vars()) fail(Errc::ArityMismatch, "lie_closure arity");

  LieClosureResult result;
  result.max_dim = max_dim;
  result.max_deg = max_deg;
  result.span = span_reduce({P, Q});
  DerivationSpan &span = result.span;

  if (span.dimension() > max_dim) {
    result.status = LieClosureResult::Status::ExceededDim;
    return result;
  }

  Echelon ech;
  for (const auto &b : span.basis) {
    SparseVec v = to_vec(b);
    ech.reduce(v);
    ech.insert(std::move(v));
  }

  // every pair (i < j) is bracketed exactly once; the j loop keeps running
  // over elements adjoined along the way
  for (std::size_t j = 1; j < span.basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Derivation br = commutator(span.basis[i], span.basis[j]);
      int deg = br.degree();
      span.max_deg_seen = std::max(span.max_deg_seen, deg);
      if (deg > max_deg) {
        result.status = LieClosureResult::Status::ExceededDeg;
        return result;
      }
      SparseVec v = to_vec(br);
      ech.reduce(v);
      if (v.empty()) continue;
      if (span.dimension() + 1 > max_dim) {
        result.status = LieClosureResult::Status::ExceededDim;
        return result;
      }
      ech.insert(std::move(v));
      span.basis.push_back(std::move(br));
    }
  }
  result.status = LieClosureResult::Status::FiniteDim;
  return result;
}

} // namespace cremona
