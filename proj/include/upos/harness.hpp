#pragma once

#include <vector>

#include "upos/lrs.hpp"

namespace upos {

/// Indices n <= horizon with u_n < 0, by exact iteration.
std::vector<unsigned long> falsify(const LRSRep& u, unsigned long horizon);

/// lambda = (a + bi)^2 / p for a prime p = a^2 + b^2, p = 1 mod 4, a < b.
struct GaussianPrimeUnit {
  unsigned long p = 0;
  unsigned long a = 0;
  unsigned long b = 0;
  AlgebraicNumber lambda;
};

/// The first s primes congruent to 1 mod 4 with their units.
std::vector<GaussianPrimeUnit> gaussian_units(std::size_t s);

struct Monomial {
  Rational coeff;
  std::vector<unsigned> exponents;
};

/// Polynomial over Q in `variables` unknowns.
struct PolyInstance {
  std::size_t variables = 0;
  std::vector<Monomial> terms;

  unsigned total_degree() const;
  /// Throws InvalidInput on arity mismatch or total degree above kMaxPolyDegree.
  void validate() const;
};

inline constexpr unsigned kMaxPolyDegree = 8;

/// Order-2 recurrence of y_n = Re(lambda^n) for |lambda| = 1.
LRSRep cosine_lrs(const AlgebraicNumber& lambda);

/// Minimal recurrence of u_n = f(y_{1,n}^2, ..., y_{s,n}^2) with y_{j,n} = Re(lambda_j^n)
/// for the first s Gaussian prime units.
LRSRep reduce_pos_to_lrs(const PolyInstance& f);

}  // namespace upos
