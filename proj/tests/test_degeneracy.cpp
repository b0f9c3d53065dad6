#include <gtest/gtest.h>

#include <random>

#include "upos/degeneracy.hpp"
#include "upos/errors.hpp"

using namespace upos;

namespace {

const LRSRep kCos{{1, -1, 1}, {3, 1, -1}};

// Recurrence with characteristic polynomial f and the given initial values.
LRSRep from_char_poly(const UniPoly& f, std::mt19937_64& rng) {
  UniPoly m = f.monic();
  std::uniform_int_distribution<int> d(-3, 3);
  LRSRep u;
  const int k = m.degree();
  for (int i = 1; i <= k; ++i) u.coeffs.push_back(-m[static_cast<std::size_t>(k - i)]);
  for (int i = 0; i < k; ++i) u.initial.emplace_back(d(rng));
  return u;
}

}  // namespace

TEST(Plan, Examples) {
  auto i = AlgebraicNumber::gaussian(0, 1);
  DecompositionPlan p = plan_decomposition({AlgebraicNumber(1), i, alg_conj(i)});
  EXPECT_EQ(p.M, 4u);
  EXPECT_EQ(p.classes.size(), 1u);
  DecompositionPlan q = plan_decomposition({AlgebraicNumber(2), AlgebraicNumber(3)});
  EXPECT_EQ(q.M, 1u);
  EXPECT_EQ(q.classes.size(), 2u);
  EXPECT_EQ(plan_decomposition({AlgebraicNumber(1), AlgebraicNumber(-1)}).M, 2u);
  EXPECT_THROW(plan_decomposition({AlgebraicNumber(0), AlgebraicNumber(1)}), InvalidInput);
}

TEST(Subsequence, Examples) {
  ClosedForm cf = closed_form(kCos);
  ClosedForm two = subsequence_closed_form(cf, 4, 2);
  ASSERT_EQ(two.terms.size(), 1u);
  EXPECT_TRUE(alg_equals(two.terms[0].root, AlgebraicNumber(1)));
  EXPECT_TRUE(alg_equals(two.terms[0].coeff, AlgebraicNumber(-1)));
  ClosedForm zero = subsequence_closed_form(cf, 4, 0);
  ASSERT_EQ(zero.terms.size(), 1u);
  EXPECT_TRUE(alg_equals(zero.terms[0].coeff, AlgebraicNumber(3)));
  ClosedForm same = subsequence_closed_form(cf, 1, 0);
  EXPECT_EQ(same.terms.size(), cf.terms.size());
  auto t = evaluate_terms(kCos, 40);
  for (std::size_t n = 0; n < 10; ++n) {
    EXPECT_EQ(t[4 * n + 2], -1);
    EXPECT_EQ(t[4 * n], 3);
  }
}

TEST(Subsequence, RandomDegenerateReconstruction) {
  std::mt19937_64 rng(21);
  const std::vector<UniPoly> pool = {
      {-1, 1}, {1, 1}, {1, 0, 1}, {1, 1, 1}, {-2, 1}, {2, 1}, {-2, 0, 1}, {4, 0, 1}, {1, -1, 1}, {3, 2, 1},
  };
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    UniPoly f = UniPoly::constant(1);
    std::vector<bool> used(pool.size(), false);
    for (int j = 0; j < 3; ++j) {
      std::size_t idx = pick(rng);
      if (used[idx] || f.degree() + pool[idx].degree() > 4) continue;
      used[idx] = true;
      f = f * pool[idx];
    }
    if (f.degree() < 1) continue;
    LRSRep u = minimize(from_char_poly(f, rng));
    if (u.order() == 0) continue;
    ++checked;
    auto roots = char_roots(u);
    DecompositionPlan plan = plan_decomposition(roots);
    // classes: every pair in a class has quotient^M = 1
    for (const auto& cls : plan.classes) {
      for (std::size_t a : cls) {
        for (std::size_t b : cls) {
          EXPECT_TRUE(alg_equals(alg_pow(roots[a] / roots[b], static_cast<long>(plan.M)), AlgebraicNumber(1)));
        }
      }
    }
    EXPECT_EQ(plan.M == 1, plan.classes.size() == roots.size());
    ClosedForm cf = closed_form(u);
    auto terms = evaluate_terms(u, plan.M * 11);
    for (unsigned long l = 0; l < plan.M; ++l) {
      ClosedForm sub = subsequence_closed_form(cf, plan.M, l);
      for (unsigned long n = 0; n <= 10; ++n) {
        ComplexInterval e = evaluate_closed_form(sub, n, 128);
        EXPECT_TRUE(e.re.contains(terms[plan.M * n + l]));
      }
      std::vector<AlgebraicNumber> sub_roots;
      for (const auto& t : sub.terms) sub_roots.push_back(t.root);
      EXPECT_EQ(plan_decomposition(sub_roots).M, 1u);
      // the subsequence recurrence generates the same values
      LRSRep v = subsequence_lrs(u, plan.M, l);
      auto vt = evaluate_terms(v, 10);
      for (unsigned long n = 0; n <= 10; ++n) EXPECT_EQ(vt[n], terms[plan.M * n + l]);
    }
  }
  EXPECT_GE(checked, 8);
}
