#pragma once

#include <vector>

#include "upos/poly.hpp"

namespace upos {

struct Factorization {
  /// Primitive integer polynomials with positive leading coefficient.
  std::vector<UniPoly> factors;
  /// False when the recombination budget ran out; the last factor may then be reducible.
  bool complete = true;
};

/// Factors a squarefree polynomial over Q into irreducibles (Zassenhaus:
/// modular factorization, Hensel lifting, factor recombination). Constants
/// are dropped. Deterministic.
Factorization factor_squarefree(const UniPoly& p, long subset_budget = 20000);

}  // namespace upos
