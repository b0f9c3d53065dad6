#include <gtest/gtest.h>

#include <random>

#include "upos/errors.hpp"
#include "upos/relations.hpp"

using namespace upos;

namespace {

AlgebraicNumber g(long re, long im, long den) { return AlgebraicNumber::gaussian(ratio(re, den), ratio(im, den)); }

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Lattice of v in the box with sum v_j t_j integral, for rational angles t_j.
IntMatrix torsion_oracle(const std::vector<Rational>& t, long cap) {
  const std::size_t s = t.size();
  IntMatrix gens;
  std::vector<long> cur(s, -cap);
  while (true) {
    Rational sum = 0;
    for (std::size_t j = 0; j < s; ++j) sum += Rational(cur[j]) * t[j];
    if (sum.get_den() == 1) gens.emplace_back(cur.begin(), cur.end());
    std::size_t i = 0;
    while (i < s && cur[i] == cap) cur[i++] = -cap;
    if (i == s) break;
    ++cur[i];
  }
  return hermite_form(gens, s);
}

}  // namespace

TEST(Verify, Examples) {
  AlgebraicNumber l = g(-3, 4, 5);
  EXPECT_TRUE(verify_relation({l, alg_conj(l)}, iv({1, 1})));
  EXPECT_TRUE(verify_relation({AlgebraicNumber::gaussian(0, 1)}, iv({4})));
  EXPECT_FALSE(verify_relation({AlgebraicNumber::gaussian(0, 1)}, iv({2})));
  EXPECT_FALSE(verify_relation({l}, iv({1})));
  EXPECT_FALSE(verify_relation({l}, iv({12})));
  EXPECT_TRUE(verify_relation({l, alg_mul(l, l)}, iv({2, -1})));
  EXPECT_THROW(verify_relation({l}, iv({1L << 20})), ResourceLimit);
}

TEST(Find, IAndMinusI) {
  auto i = AlgebraicNumber::gaussian(0, 1);
  RelationLattice L = find_relations({i, alg_conj(i)}, 4, 128);
  EXPECT_EQ(L.completeness, Completeness::Exhaustive);
  EXPECT_EQ(L.basis, torsion_oracle({ratio(1, 4), ratio(3, 4)}, 4));
  EXPECT_TRUE(in_lattice(L.basis, iv({1, 1})));
  EXPECT_TRUE(in_lattice(L.basis, iv({4, 0})));
}

TEST(Find, GaussianIndependent) {
  RelationLattice L = find_relations({g(-3, 4, 5), g(-5, 12, 13)}, 20, 128);
  EXPECT_EQ(L.rank(), 0u);
  EXPECT_EQ(L.completeness, Completeness::Exhaustive);
}

TEST(Find, ConjugatePair) {
  for (auto l : {g(3, 4, 5), g(-7, 24, 25), AlgebraicNumber::unit_root(ratio(2, 7))}) {
    RelationLattice L = find_relations({l, alg_conj(l)}, 20, 128);
    EXPECT_TRUE(in_lattice(L.basis, iv({1, 1})));
    for (const auto& v : L.basis) EXPECT_TRUE(verify_relation({l, alg_conj(l)}, v));
  }
}

TEST(Find, RootsOfUnity) {
  for (long n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    RelationLattice L = find_relations({AlgebraicNumber::unit_root(ratio(1, n))}, 20, 128);
    EXPECT_EQ(L.completeness, Completeness::Exhaustive);
    ASSERT_EQ(L.rank(), 1u) << n;
    EXPECT_EQ(L.basis[0][0], n);
  }
}

TEST(Find, MixedTorsionExhaustive) {
  // angles 1/6, 1/4, and an independent Gaussian unit
  std::vector<AlgebraicNumber> l = {AlgebraicNumber::unit_root(ratio(1, 6)), AlgebraicNumber::unit_root(ratio(1, 4)),
                                    g(3, 4, 5)};
  RelationLattice L = find_relations(l, 12, 128);
  EXPECT_EQ(L.completeness, Completeness::Exhaustive);
  IntMatrix two = torsion_oracle({ratio(1, 6), ratio(1, 4)}, 12);
  IntMatrix expect;
  for (auto v : two) {
    v.emplace_back(0);
    expect.push_back(v);
  }
  EXPECT_EQ(L.basis, hermite_form(expect, 3));
}

TEST(Find, StabilizedPath) {
  AlgebraicNumber a = g(3, 4, 5), b = g(5, 12, 13);
  std::vector<AlgebraicNumber> l = {a, alg_conj(a), b, alg_mul(a, a), AlgebraicNumber::gaussian(0, 1)};
  RelationLattice L = find_relations(l, 20, 128);
  EXPECT_EQ(L.completeness, Completeness::Stabilized);
  EXPECT_GE(L.precision_bits, 128);
  // a conj(a) = 1, a^2 = l_3, i^4 = 1; the Gaussian units (3+4i)/5, (5+12i)/13
  // and i are independent apart from torsion
  IntMatrix expect = hermite_form({iv({1, 1, 0, 0, 0}), iv({2, 0, 0, -1, 0}), iv({0, 0, 0, 0, 4})}, 5);
  EXPECT_EQ(L.basis, expect);
  for (const auto& v : L.basis) EXPECT_TRUE(verify_relation(l, v));
}

TEST(Find, RejectsNonUnit) {
  EXPECT_THROW(find_relations({AlgebraicNumber(2)}, 4, 128), InvalidInput);
  EXPECT_THROW(find_relations({g(1, 1, 1)}, 4, 128), InvalidInput);
}

TEST(Scale, Examples) {
  RelationLattice four{1, {iv({4})}, Completeness::Exhaustive, 128};
  EXPECT_EQ(scale_lattice(four, 2).basis, IntMatrix{iv({2})});
  RelationLattice zero{2, {}, Completeness::Exhaustive, 128};
  EXPECT_TRUE(scale_lattice(zero, 5).basis.empty());
  RelationLattice full{2, identity_matrix(2), Completeness::Exhaustive, 128};
  EXPECT_EQ(scale_lattice(full, 3).basis, identity_matrix(2));
}

TEST(Scale, MatchesRelationsOfPowers) {
  std::vector<AlgebraicNumber> l = {AlgebraicNumber::gaussian(0, 1), g(3, 4, 5), AlgebraicNumber::unit_root(ratio(1, 6))};
  RelationLattice L = find_relations(l, 12, 128);
  for (unsigned long M : {2UL, 3UL, 4UL, 6UL}) {
    std::vector<AlgebraicNumber> lm;
    for (const auto& x : l) lm.push_back(alg_pow(x, static_cast<long>(M)));
    EXPECT_EQ(scale_lattice(L, M).basis, find_relations(lm, 12, 128).basis) << M;
  }
}

TEST(Scale, RandomLatticesBruteForce) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t s = 1 + trial % 3;
    IntMatrix gens(1 + trial % 2, IntVector(s));
    for (auto& r : gens) {
      for (auto& x : r) x = d(rng);
    }
    RelationLattice L{s, hermite_form(gens, s), Completeness::Exhaustive, 128};
    EXPECT_EQ(scale_lattice(L, 1).basis, L.basis);
    const unsigned long M = 2 + trial % 3, N = 2 + (trial / 3) % 3;
    EXPECT_EQ(scale_lattice(scale_lattice(L, M), N).basis, scale_lattice(L, M * N).basis);
    RelationLattice S = scale_lattice(L, M);
    EXPECT_EQ(S.rank(), L.rank());
    // c in S iff M c in L, over a box
    std::vector<long> cur(s, -6);
    while (true) {
      IntVector c(cur.begin(), cur.end()), mc = c;
      for (auto& x : mc) x *= static_cast<long>(M);
      EXPECT_EQ(in_lattice(S.basis, c), in_lattice(L.basis, mc));
      std::size_t i = 0;
      while (i < s && cur[i] == 6) cur[i++] = -6;
      if (i == s) break;
      ++cur[i];
    }
  }
}

TEST(Torus, Examples) {
  TorusDecomposition full = parametrize_torus({2, {}, Completeness::Exhaustive, 0});
  EXPECT_EQ(full.r, 2u);
  EXPECT_EQ(full.freq, identity_matrix(2));
  ASSERT_EQ(full.cosets.size(), 1u);
  EXPECT_EQ(full.cosets[0], (std::vector<Rational>{0, 0}));

  TorusDecomposition four = parametrize_torus({1, {iv({4})}, Completeness::Exhaustive, 0});
  EXPECT_EQ(four.r, 0u);
  std::vector<Rational> angles;
  for (const auto& c : four.cosets) angles.push_back(c[0]);
  std::sort(angles.begin(), angles.end());
  EXPECT_EQ(angles, (std::vector<Rational>{0, ratio(1, 4), ratio(1, 2), ratio(3, 4)}));

  TorusDecomposition anti = parametrize_torus({2, {iv({1, 1})}, Completeness::Exhaustive, 0});
  EXPECT_EQ(anti.r, 1u);
  EXPECT_EQ(anti.freq, (IntMatrix{iv({1}), iv({-1})}));
  EXPECT_EQ(anti.cosets.size(), 1u);
}

TEST(Torus, RandomLatticesSatisfyRelations) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> num(0, 999);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t s = 1 + trial % 4;
    IntMatrix gens(trial % 3, IntVector(s));
    for (auto& r : gens) {
      for (auto& x : r) x = d(rng);
    }
    RelationLattice L{s, hermite_form(gens, s), Completeness::Exhaustive, 0};
    TorusDecomposition t = parametrize_torus(L);
    EXPECT_EQ(t.r, s - L.rank());
    Integer expect_cosets = 1;
    if (L.rank() > 0) {
      for (const auto& dd : smith_form(L.basis, s).diagonal) expect_cosets *= dd;
    }
    EXPECT_EQ(Integer(static_cast<unsigned long>(t.cosets.size())), expect_cosets);
    for (const auto& v : L.basis) {
      for (std::size_t m = 0; m < t.r; ++m) {
        Integer acc = 0;
        for (std::size_t j = 0; j < s; ++j) acc += v[j] * t.freq[j][m];
        EXPECT_EQ(acc, 0);
      }
      for (const auto& off : t.cosets) {
        Rational acc = 0;
        for (std::size_t j = 0; j < s; ++j) acc += Rational(v[j]) * off[j];
        EXPECT_EQ(acc.get_den(), 1);
      }
    }
    // numeric check of z^v = 1 at random parameters
    for (int sample = 0; sample < 100; ++sample) {
      std::vector<Rational> phi(t.r);
      for (auto& p : phi) p = ratio(num(rng), 1000);
      const auto& off = t.cosets[static_cast<std::size_t>(sample) % t.cosets.size()];
      for (const auto& v : L.basis) {
        const mpfr_prec_t prec = 96;
        ComplexInterval z(Interval(Rational(1), prec), Interval(Rational(0), prec));
        const Interval two_pi = Interval(Rational(2), prec) * Interval::pi(prec);
        for (std::size_t j = 0; j < s; ++j) {
          Rational angle = off[j];
          for (std::size_t m = 0; m < t.r; ++m) angle += Rational(t.freq[j][m]) * phi[m];
          ComplexInterval e = expi(two_pi * Interval(angle * Rational(v[j]), prec));
          z = z * e;
        }
        EXPECT_TRUE(z.re.contains(Rational(1)));
        EXPECT_TRUE(z.im.contains_zero());
      }
    }
  }
}
