#include "upos/degeneracy.hpp"

#include <numeric>

#include "upos/errors.hpp"

namespace upos {

DecompositionPlan plan_decomposition(const std::vector<AlgebraicNumber>& roots) {
  const std::size_t k = roots.size();
  for (const AlgebraicNumber& r : roots) {
    if (alg_is_zero(r)) throw InvalidInput("characteristic root 0");
  }
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  DecompositionPlan plan;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (compare_modulus(roots[i], roots[j]) != 0) continue;
      // ord(a/b) = ord(b/a), so unordered pairs suffice
      std::optional<unsigned> ord = is_root_of_unity(roots[i] / roots[j]);
      if (!ord) continue;
      plan.M = std::lcm(plan.M, static_cast<unsigned long>(*ord));
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> slot(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t r = find(i);
    if (slot[r] == k) {
      slot[r] = plan.classes.size();
      plan.classes.emplace_back();
      plan.representatives.push_back(i);
    }
    plan.classes[slot[r]].push_back(i);
  }
  return plan;
}

ClosedForm subsequence_closed_form(const ClosedForm& cf, unsigned long M, unsigned long l) {
  if (M == 0 || l >= M) throw InvalidInput("subsequence needs 0 <= l < M");
  if (M == 1) return cf;
  std::vector<ClosedTerm> merged;
  for (const ClosedTerm& t : cf.terms) {
    AlgebraicNumber root = alg_pow(t.root, static_cast<long>(M));
    AlgebraicNumber coeff = l == 0 ? t.coeff : alg_mul(t.coeff, alg_pow(t.root, static_cast<long>(l)));
    bool found = false;
    for (ClosedTerm& m : merged) {
      if (alg_equals(m.root, root)) {
        m.coeff = alg_add(m.coeff, coeff);
        found = true;
        break;
      }
    }
    if (!found) merged.push_back({root, coeff});
  }
  ClosedForm out;
  for (ClosedTerm& m : merged) {
    if (!alg_is_zero(m.coeff)) out.terms.push_back(std::move(m));
  }
  return out;
}

LRSRep subsequence_lrs(const LRSRep& u, unsigned long M, unsigned long l) {
  if (M == 0 || l >= M) throw InvalidInput("subsequence needs 0 <= l < M");
  const std::size_t k = u.order();
  if (k == 0) return {};
  auto terms = evaluate_terms(u, M * 2 * k + l);
  std::vector<Rational> sub;
  for (std::size_t n = 0; n < 2 * k; ++n) sub.push_back(terms[M * n + l]);
  return lrs_from_terms(sub, k);
}

}  // namespace upos
