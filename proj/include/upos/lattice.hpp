#pragma once

#include <vector>

#include "upos/rational.hpp"

namespace upos {

using IntVector = std::vector<Integer>;
/// Row-major integer matrix; lattices are spanned by the rows.
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Row Hermite normal form of the row lattice, zero rows dropped: pivots
/// strictly increase to the right, are positive, and entries above a pivot
/// lie in [0, pivot). Canonical for the lattice.
IntMatrix hermite_form(const IntMatrix& rows, std::size_t cols);

/// Rank of the row lattice.
std::size_t lattice_rank(const IntMatrix& rows, std::size_t cols);

/// Whether v lies in the lattice with the given Hermite basis.
bool in_lattice(const IntMatrix& hermite, const IntVector& v);

/// Basis (in Hermite form) of { x in Z^m : x A = 0 } for an m x n matrix A.
IntMatrix left_kernel(const IntMatrix& a, std::size_t n);

struct SmithForm {
  IntMatrix u;  // k x k unimodular
  IntMatrix v;  // s x s unimodular
  std::vector<Integer> diagonal;  // nonzero invariant factors d_1 | d_2 | ...
};

/// U A V = diag(d_1, ..., d_r, 0, ...) for a k x s matrix A.
SmithForm smith_form(const IntMatrix& a, std::size_t cols);

/// LLL reduction (delta = 3/4) of linearly independent integer rows.
IntMatrix lll_reduce(IntMatrix basis);

}  // namespace upos
