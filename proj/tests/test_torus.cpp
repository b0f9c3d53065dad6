#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "upos/errors.hpp"
#include "upos/torus.hpp"

using namespace upos;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TorusProblem make(const AlgebraicNumber& b, std::vector<AlgebraicNumber> cs, IntMatrix rel) {
  const std::size_t s = cs.size();
  RelationLattice L{s, hermite_form(rel, s), Completeness::Exhaustive, 0};
  return {b, std::move(cs), parametrize_torus(L)};
}

// Independent double-precision value of f at angles q (turns).
struct DoubleF {
  double b;
  std::vector<std::complex<double>> c;

  explicit DoubleF(const TorusProblem& p) : b(p.b.approx_re()) {
    for (const auto& x : p.cs) c.emplace_back(x.approx_re(), x.approx_im());
  }
  double operator()(const std::vector<double>& q) const {
    double v = b;
    for (std::size_t j = 0; j < q.size(); ++j) v += 2 * std::real(c[j] * std::polar(1.0, 2 * M_PI * q[j]));
    return v;
  }
};

// Minimum of f over N samples of every one-parameter coset.
double sample_min(const TorusProblem& p, int n) {
  const auto& t = p.torus;
  const DoubleF f_double(p);
  double best = INFINITY;
  for (const auto& off : t.cosets) {
    for (int i = 0; i < n; ++i) {
      std::vector<double> q(t.s);
      for (std::size_t j = 0; j < t.s; ++j) {
        q[j] = off[j].get_d();
        for (std::size_t m = 0; m < t.r; ++m) q[j] += t.freq[j][m].get_d() * i / n;
      }
      best = std::min(best, f_double(q));
    }
  }
  return best;
}

void expect_sound_witness(const TorusProblem& p, const TorusVerdict& v) {
  ASSERT_EQ(v.outcome, TorusOutcome::NegWitness);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_LT(sign_at_torsion(p, *v.witness), 0);
  // exact algebraic re-evaluation while the cyclotomic degrees stay small
  Integer den = 1;
  for (const Rational& q : *v.witness) den = lcm(den, Integer(q.get_den()));
  if (den > 12) return;
  try {
    EXPECT_LT(alg_sign_real(eval_at_torsion(p, *v.witness)), 0);
  } catch (const ResourceLimit&) {
  }
}

}  // namespace

TEST(MinFullTorus, Examples) {
  EXPECT_TRUE(alg_equals(min_full_torus(3, {1}), AlgebraicNumber(1)));
  EXPECT_TRUE(alg_equals(min_full_torus(1, {ratio(1, 2)}), AlgebraicNumber(0)));
  EXPECT_TRUE(alg_equals(min_full_torus(1, {ratio(3, 4)}), AlgebraicNumber(ratio(-1, 2))));
  // |(3+4i)/10| = 1/2
  EXPECT_TRUE(alg_equals(min_full_torus(2, {AlgebraicNumber::gaussian(ratio(3, 10), ratio(4, 10))}), AlgebraicNumber(1)));
}

TEST(EvalAtTorsion, Examples) {
  TorusProblem p = make(1, {1}, {});
  EXPECT_TRUE(alg_equals(eval_at_torsion(p, {ratio(1, 2)}), AlgebraicNumber(-1)));
  EXPECT_TRUE(alg_equals(eval_at_torsion(p, {Rational(0)}), AlgebraicNumber(3)));
  EXPECT_TRUE(alg_equals(eval_at_torsion(p, {ratio(1, 3)}), AlgebraicNumber(0)));
  TorusProblem q = make(1, {1}, {iv({4})});
  EXPECT_THROW(eval_at_torsion(q, {ratio(1, 3)}), InvalidInput);
}

TEST(Decide, Examples) {
  TorusVerdict a = decide_nonneg(make(1, {ratio(1, 2)}, {}));
  EXPECT_EQ(a.outcome, TorusOutcome::Nonneg);
  EXPECT_EQ(a.stage, TorusStage::FullTorus);
  ASSERT_TRUE(a.minimum.has_value());
  EXPECT_TRUE(alg_is_zero(*a.minimum));

  TorusProblem fin = make(1, {1}, {iv({4})});
  TorusVerdict b = decide_nonneg(fin);
  EXPECT_EQ(b.stage, TorusStage::Finite);
  expect_sound_witness(fin, b);
  EXPECT_EQ(*b.witness, std::vector<Rational>{ratio(1, 2)});
  EXPECT_TRUE(alg_equals(eval_at_torsion(fin, *b.witness), AlgebraicNumber(-1)));

  TorusVerdict c = decide_nonneg(make(10, {1, 1}, {}));
  EXPECT_EQ(c.outcome, TorusOutcome::Nonneg);
  EXPECT_TRUE(alg_equals(*c.minimum, AlgebraicNumber(6)));
}

TEST(Decide, EmptyTorusSign) {
  EXPECT_EQ(decide_nonneg(make(0, {}, {})).outcome, TorusOutcome::Nonneg);
  TorusProblem p = make(-1, {}, {});
  TorusVerdict v = decide_nonneg(p);
  expect_sound_witness(p, v);
}

TEST(Decide, FullTorusNegativeWitness) {
  // 1 + (3/2) cos: witness near angle 1/2
  TorusProblem p = make(1, {ratio(3, 4)}, {});
  TorusVerdict v = decide_nonneg(p);
  expect_sound_witness(p, v);
  // complex coefficients with algebraic modulus
  TorusProblem q = make(1, {AlgebraicNumber::gaussian(ratio(1, 3), ratio(1, 4)), AlgebraicNumber::gaussian(ratio(1, 5), ratio(-1, 7))}, {});
  TorusVerdict w = decide_nonneg(q);
  expect_sound_witness(q, w);
}

TEST(OneParameter, AgreesWithSampling) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> num(-6, 6), fr(-4, 4);
  int negs = 0, nonnegs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t s = 2 + trial % 2;
    std::vector<AlgebraicNumber> cs;
    for (std::size_t j = 0; j < s; ++j) cs.push_back(AlgebraicNumber::gaussian(ratio(num(rng), 8), ratio(num(rng), 8)));
    // relations leaving one free direction with frequencies at most 4
    IntVector dir(s);
    for (auto& x : dir) x = fr(rng);
    if (std::all_of(dir.begin(), dir.end(), [](const Integer& x) { return x == 0; })) dir[0] = 1;
    IntMatrix rel = left_kernel([&] {
      IntMatrix m;
      for (const auto& x : dir) m.push_back({x});
      return m;
    }(), 1);
    if (trial % 4 == 0) rel[0][0] *= 2;  // torsion cosets as well
    TorusProblem p = make(AlgebraicNumber(ratio(num(rng) + 6, 4)), cs, rel);
    ASSERT_EQ(p.torus.r, 1u);
    TorusVerdict v = decide_nonneg(p);
    EXPECT_EQ(v.stage, TorusStage::OneParameter);
    const double m = sample_min(p, 100000);
    if (m < -1e-9) {
      EXPECT_EQ(v.outcome, TorusOutcome::NegWitness);
    }
    if (v.outcome == TorusOutcome::Nonneg) {
      EXPECT_GE(m, -1e-9);
      ++nonnegs;
    } else {
      expect_sound_witness(p, v);
      ++negs;
    }
  }
  EXPECT_GT(negs, 0);
  EXPECT_GT(nonnegs, 0);
}

TEST(OneParameter, BoundaryMinimumZero) {
  // z1 = z2: f = 2 + 2 cos, minimum exactly 0
  TorusProblem p = make(2, {ratio(1, 2), ratio(1, 2)}, {iv({1, -1})});
  TorusVerdict v = decide_nonneg(p);
  EXPECT_EQ(v.stage, TorusStage::OneParameter);
  EXPECT_EQ(v.outcome, TorusOutcome::Nonneg);
  TorusProblem q = make(ratio(199, 100), {ratio(1, 2), ratio(1, 2)}, {iv({1, -1})});
  expect_sound_witness(q, decide_nonneg(q));
}

TEST(OneParameter, AlgebraicCoefficients) {
  // c = (1+sqrt2 i)/4 on z1 = z2^2
  AlgebraicNumber c = alg_mul(AlgebraicNumber(ratio(1, 4)),
                              alg_add(AlgebraicNumber(1), alg_mul(AlgebraicNumber::gaussian(0, 1), alg_sqrt(AlgebraicNumber(2)))));
  for (long b : {1L, 2L, 3L}) {
    TorusProblem p = make(AlgebraicNumber(b), {c, ratio(1, 3)}, {iv({1, -2})});
    TorusVerdict v = decide_nonneg(p);
    const double m = sample_min(p, 100000);
    if (v.outcome == TorusOutcome::Nonneg) {
      EXPECT_GE(m, -1e-9);
    } else {
      expect_sound_witness(p, v);
    }
    if (m < -1e-9) EXPECT_EQ(v.outcome, TorusOutcome::NegWitness);
  }
}

TEST(Search, ConsistentWithFullTorusClosedForm) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<AlgebraicNumber> cs = {AlgebraicNumber::gaussian(ratio(num(rng), 8), ratio(num(rng), 8)),
                                       AlgebraicNumber::gaussian(ratio(num(rng), 8), ratio(num(rng), 8))};
    AlgebraicNumber b(ratio(num(rng) + 10, 4));
    TorusVerdict closed = decide_nonneg(make(b, cs, {}));
    // same function with a dummy coordinate pinned to 1 forces the search stage
    std::vector<AlgebraicNumber> padded = cs;
    padded.push_back(AlgebraicNumber(0));
    TorusProblem p = make(b, padded, {iv({0, 0, 1})});
    ASSERT_EQ(p.torus.r, 2u);
    TorusVerdict v = decide_nonneg(p);
    EXPECT_EQ(v.stage, TorusStage::Search);
    if (v.outcome == TorusOutcome::NegWitness) {
      EXPECT_EQ(closed.outcome, TorusOutcome::NegWitness);
      expect_sound_witness(p, v);
    } else if (v.outcome == TorusOutcome::Nonneg) {
      EXPECT_EQ(closed.outcome, TorusOutcome::Nonneg);
    } else {
      // only a vanishing minimum may stay open
      EXPECT_TRUE(closed.minimum && alg_is_zero(*closed.minimum));
    }
  }
}

TEST(Search, BoundaryInstanceIsInconclusive) {
  // z1 = z2, z3 free: f = 2 + cos a + cos b, minimum exactly 0
  TorusProblem p = make(2, {ratio(1, 4), ratio(1, 4), ratio(1, 2)}, {iv({1, -1, 0})});
  ASSERT_EQ(p.torus.r, 2u);
  TorusVerdict v = decide_nonneg(p);
  EXPECT_EQ(v.stage, TorusStage::Search);
  EXPECT_EQ(v.outcome, TorusOutcome::Inconclusive);
  ASSERT_TRUE(v.lower_bound && v.upper_bound);
  EXPECT_LE(*v.lower_bound, 0);
  EXPECT_GE(*v.upper_bound, 0);
}

TEST(FullTorus, SampledInfimumApproachesClosedForm) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<AlgebraicNumber> cs = {AlgebraicNumber::gaussian(ratio(num(rng), 8), ratio(num(rng), 8)),
                                       AlgebraicNumber::gaussian(ratio(num(rng), 8), ratio(num(rng), 8))};
    TorusProblem p = make(1, cs, {});
    const double closed = min_full_torus(p.b, p.cs).approx_re();
    const DoubleF f_double(p);
    double best = INFINITY;
    const int n = 400;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) best = std::min(best, f_double({double(i) / n, double(j) / n}));
    }
    EXPECT_NEAR(best, closed, 1e-3);
    EXPECT_GE(best, closed - 1e-12);
  }
}
