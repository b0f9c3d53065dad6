#pragma once

#include <vector>

#include "upos/lrs.hpp"

namespace upos {

struct DecompositionPlan {
  unsigned long M = 1;
  /// Root indices grouped by "quotient is a root of unity", each class sorted.
  std::vector<std::vector<std::size_t>> classes;
  /// Smallest index of each class.
  std::vector<std::size_t> representatives;
};

DecompositionPlan plan_decomposition(const std::vector<AlgebraicNumber>& roots);

/// Closed form of v_n = u_{Mn + l}; coinciding roots are merged and zero
/// coefficients dropped.
ClosedForm subsequence_closed_form(const ClosedForm& cf, unsigned long M, unsigned long l);

/// Recurrence for v_n = u_{Mn + l}, minimized.
LRSRep subsequence_lrs(const LRSRep& u, unsigned long M, unsigned long l);

}  // namespace upos
