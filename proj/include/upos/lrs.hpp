#pragma once

#include <vector>

#include "upos/algebraic.hpp"

namespace upos {

/// u_n = a_1 u_{n-1} + ... + a_k u_{n-k} with u_0 ... u_{k-1} given.
/// Order 0 is the identically zero sequence.
struct LRSRep {
  std::vector<Rational> coeffs;
  std::vector<Rational> initial;

  std::size_t order() const { return coeffs.size(); }
  /// Throws InvalidInput unless the lengths agree and a_k != 0.
  void validate() const;
  friend bool operator==(const LRSRep& a, const LRSRep& b) {
    return a.coeffs == b.coeffs && a.initial == b.initial;
  }
};

struct ClosedTerm {
  AlgebraicNumber root;
  AlgebraicNumber coeff;
};

/// u_n = sum of coeff * root^n.
struct ClosedForm {
  std::vector<ClosedTerm> terms;
};

/// x^k - a_1 x^{k-1} - ... - a_k
UniPoly char_poly(const LRSRep& u);

LRSRep minimize(const LRSRep& u);
bool is_simple(const LRSRep& u);
std::vector<AlgebraicNumber> char_roots(const LRSRep& u);
/// Partial fractions; throws NotSimple if the characteristic polynomial has
/// repeated roots.
ClosedForm closed_form(const LRSRep& u);

std::vector<Rational> evaluate_terms(const LRSRep& u, std::size_t n_max);

/// Minimal recurrence of a sequence known to have order at most `bound`,
/// from its first 2*bound terms (Berlekamp-Massey over Q).
LRSRep lrs_from_terms(const std::vector<Rational>& terms, std::size_t bound);

LRSRep lrs_add(const LRSRep& u, const LRSRep& v);
LRSRep lrs_mul(const LRSRep& u, const LRSRep& v);

/// Enclosure of the closed form at index n.
ComplexInterval evaluate_closed_form(const ClosedForm& cf, unsigned long n, long bits);

}  // namespace upos
