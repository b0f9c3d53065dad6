#include <gtest/gtest.h>

#include <random>

#include "upos/errors.hpp"
#include "upos/lrs.hpp"

using namespace upos;

namespace {

const LRSRep kFib{{1, 1}, {0, 1}};
const LRSRep kOnes{{1}, {1}};
const LRSRep kCos{{1, -1, 1}, {3, 1, -1}};

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Rank of the n x n Hankel matrix of the sequence, by Gaussian elimination.
std::size_t hankel_rank(const std::vector<Rational>& s, std::size_t n) {
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = s[i + j];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && h[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(h[p], h[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      Rational f = h[i][c] / h[rank][c];
      for (std::size_t j = c; j < n; ++j) h[i][j] -= f * h[rank][j];
    }
    ++rank;
  }
  return rank;
}

LRSRep random_lrs(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<int> d(-4, 4);
  LRSRep u;
  for (std::size_t i = 0; i < k; ++i) {
    u.coeffs.push_back(ratio(d(rng), 1 + std::abs(d(rng))));
    u.initial.emplace_back(d(rng));
  }
  if (k > 0 && u.coeffs.back() == 0) u.coeffs.back() = 1;
  return u;
}

}  // namespace

TEST(Minimize, Examples) {
  EXPECT_EQ(minimize(LRSRep{{2, -1}, {1, 1}}), kOnes);
  EXPECT_EQ(minimize(kFib), kFib);
  EXPECT_EQ(minimize(LRSRep{{3, 1, 2}, {0, 0, 0}}).order(), 0u);
}

TEST(Minimize, MatchesHankelRankAndIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    LRSRep u = random_lrs(rng, 1 + trial % 5);
    // build some degenerate inputs by multiplying the characteristic polynomial
    if (trial % 3 == 0) u = LRSRep{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    LRSRep m = minimize(u);
    auto terms = evaluate_terms(u, 2 * u.order() + 10);
    EXPECT_EQ(m.order(), hankel_rank(terms, u.order() + 1));
    EXPECT_LE(m.order(), u.order());
    EXPECT_EQ(minimize(m), m);
    auto mt = evaluate_terms(m, terms.size() - 1);
    EXPECT_EQ(mt, terms);
  }
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple(kFib));
  LRSRep n_seq = minimize(LRSRep{{2, -1}, {0, 1}});
  EXPECT_EQ(n_seq.order(), 2u);
  EXPECT_FALSE(is_simple(n_seq));
  EXPECT_TRUE(is_simple(kOnes));
  EXPECT_TRUE(is_simple(LRSRep{}));
  EXPECT_THROW(closed_form(n_seq), NotSimple);
}

TEST(CharRoots, Examples) {
  auto r = char_roots(kFib);
  ASSERT_EQ(r.size(), 2u);
  // quadratic formula oracle
  AlgebraicNumber s5 = alg_sqrt(AlgebraicNumber(5));
  AlgebraicNumber phi = (AlgebraicNumber(1) + s5) / AlgebraicNumber(2);
  AlgebraicNumber psi = (AlgebraicNumber(1) - s5) / AlgebraicNumber(2);
  EXPECT_TRUE((alg_equals(r[0], phi) && alg_equals(r[1], psi)) || (alg_equals(r[0], psi) && alg_equals(r[1], phi)));
  auto c = char_roots(LRSRep{{1, -1, 1}, {0, 0, 1}});
  ASSERT_EQ(c.size(), 3u);
  int hits = 0;
  for (const auto& x : c) {
    hits += alg_equals(x, AlgebraicNumber(1)) + alg_equals(x, AlgebraicNumber::gaussian(0, 1)) +
            alg_equals(x, AlgebraicNumber::gaussian(0, -1));
  }
  EXPECT_EQ(hits, 3);
  auto one = char_roots(kOnes);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(alg_equals(one[0], AlgebraicNumber(1)));
  EXPECT_TRUE(char_roots(LRSRep{}).empty());
}

TEST(ClosedForm, Examples) {
  ClosedForm ones = closed_form(kOnes);
  ASSERT_EQ(ones.terms.size(), 1u);
  EXPECT_TRUE(alg_equals(ones.terms[0].coeff, AlgebraicNumber(1)));

  ClosedForm fib = closed_form(kFib);
  ASSERT_EQ(fib.terms.size(), 2u);
  AlgebraicNumber inv_s5 = alg_inv(alg_sqrt(AlgebraicNumber(5)));
  for (const auto& t : fib.terms) {
    // phi > 0 carries +1/sqrt5, the negative root carries -1/sqrt5
    AlgebraicNumber expect = alg_sign_real(t.root) > 0 ? inv_s5 : alg_neg(inv_s5);
    EXPECT_TRUE(alg_equals(t.coeff, expect));
  }

  ClosedForm cosf = closed_form(kCos);
  ASSERT_EQ(cosf.terms.size(), 3u);
  for (const auto& t : cosf.terms) EXPECT_TRUE(alg_equals(t.coeff, AlgebraicNumber(1)));
}

TEST(ClosedForm, ReconstructsRandomSequences) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 20; ++trial) {
    LRSRep u = minimize(random_lrs(rng, 1 + trial % 4));
    if (u.order() == 0 || !is_simple(u)) continue;
    ++checked;
    ClosedForm cf = closed_form(u);
    auto terms = evaluate_terms(u, 50);
    for (std::size_t n = 0; n <= 50; ++n) {
      ComplexInterval e = evaluate_closed_form(cf, n, 128);
      EXPECT_TRUE(e.re.contains(terms[n])) << "n=" << n;
      EXPECT_TRUE(e.im.contains_zero());
    }
    bool all_real = true;
    for (const auto& r : char_roots(u)) all_real = all_real && r.is_real();
    if (all_real) {
      for (const auto& t : cf.terms) EXPECT_TRUE(t.coeff.is_real());
    }
    // conjugate closure
    for (const auto& t : cf.terms) {
      if (t.root.is_real()) continue;
      bool found = false;
      for (const auto& o : cf.terms) {
        found = found || (alg_equals(o.root, alg_conj(t.root)) && alg_equals(o.coeff, alg_conj(t.coeff)));
      }
      EXPECT_TRUE(found);
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(EvaluateTerms, Examples) {
  EXPECT_EQ(evaluate_terms(kFib, 6), ints({0, 1, 1, 2, 3, 5, 8}));
  EXPECT_EQ(evaluate_terms(kCos, 5), ints({3, 1, -1, 1, 3, 1}));
  EXPECT_EQ(evaluate_terms(LRSRep{}, 3), ints({0, 0, 0, 0}));
}

TEST(Closure, Examples) {
  LRSRep two_fib = lrs_add(kFib, kFib);
  EXPECT_EQ(two_fib.order(), 2u);
  auto t = evaluate_terms(two_fib, 19), f = evaluate_terms(kFib, 19);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(t[i], 2 * f[i]);
  EXPECT_EQ(lrs_mul(kOnes, kFib), kFib);
  LRSRep sq = lrs_mul(kFib, kFib);
  EXPECT_EQ(sq.order(), 3u);
  auto s = evaluate_terms(sq, 19);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(s[i], f[i] * f[i]);
}

TEST(Closure, RandomTermwise) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    LRSRep u = random_lrs(rng, trial % 4), v = random_lrs(rng, (trial / 4) % 4);
    auto a = evaluate_terms(u, 29), b = evaluate_terms(v, 29);
    auto sum = evaluate_terms(lrs_add(u, v), 29), prod = evaluate_terms(lrs_mul(u, v), 29);
    for (std::size_t i = 0; i < 30; ++i) {
      EXPECT_EQ(sum[i], a[i] + b[i]);
      EXPECT_EQ(prod[i], a[i] * b[i]);
    }
  }
}

TEST(LRSRep, Validation) {
  EXPECT_THROW(LRSRep({{1, 0}, {1, 1}}).validate(), InvalidInput);
  EXPECT_THROW(LRSRep({{1}, {1, 1}}).validate(), InvalidInput);
}
