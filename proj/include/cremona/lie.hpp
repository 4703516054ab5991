#pragma once

#include <vector>

#include "cremona/derivation.hpp"

namespace cremona {

// A finite-dimensional rational span of derivations, closed under the state
// recorded by the producing computation.
struct DerivationSpan {
  int n = 0;
  std::vector<Derivation> basis; // linearly independent over Q
  int max_deg_seen = -1;

  int dimension() const { return static_cast<int>(basis.size()); }
  // exact membership in the rational span of the basis
  bool contains(const Derivation &d) const;
};

// basis of the rational linear span of the generators, by exact elimination
// on coefficient vectors; generators are kept in first-seen order
DerivationSpan span_reduce(const std::vector<Derivation> &gens);

inline constexpr int default_max_dim = 64;
inline constexpr int default_max_deg = 32;

// Saturate span{P,Q} under commutators until stable or a bound trips. A
// FiniteDim result is a statement about the generated Lie algebra of
// derivations only; Exceeded is inconclusive by design.
struct LieClosureResult {
  enum class Status { FiniteDim, ExceededDim, ExceededDeg };
  Status status = Status::FiniteDim;
  DerivationSpan span; // the basis accumulated so far
  int max_dim = 0, max_deg = 0;

  bool finite() const { return status == Status::FiniteDim; }
};

LieClosureResult lie_closure(const Derivation &P, const Derivation &Q,
                             int max_dim = default_max_dim,
                             int max_deg = default_max_deg);

} // namespace cremona
