#include <gtest/gtest.h>

#include <random>

#include "upos/algebraic.hpp"
#include "upos/errors.hpp"

using namespace upos;

namespace {

Rational q(long n, long d = 1) { return ratio(n, d); }

AlgebraicNumber sqrt2() { return alg_sqrt(AlgebraicNumber(2)); }
AlgebraicNumber unit_i() { return AlgebraicNumber::gaussian(q(0), q(1)); }

// A random algebraic number: a root of a random squarefree integer polynomial.
AlgebraicNumber random_algebraic(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> dist(-6, 6);
  while (true) {
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = dist(rng);
    if (c.back() == 0) c.back() = 1;
    if (c.front() == 0) c.front() = 1;
    const UniPoly p(c);
    const auto roots = roots_of(p);
    if (roots.empty()) continue;
    return roots[rng() % roots.size()];
  }
}

bool contains(const ComplexInterval& outer, const ComplexInterval& inner) {
  return mpfr_lessequal_p(outer.re.lo().get(), inner.re.lo().get()) &&
         mpfr_lessequal_p(inner.re.hi().get(), outer.re.hi().get()) &&
         mpfr_lessequal_p(outer.im.lo().get(), inner.im.lo().get()) &&
         mpfr_lessequal_p(inner.im.hi().get(), outer.im.hi().get());
}

}  // namespace

TEST(Algebraic, RationalFastPath) {
  const AlgebraicNumber a(q(3, 4));
  EXPECT_TRUE(a.is_rational());
  EXPECT_TRUE(a.is_real());
  EXPECT_EQ((a + AlgebraicNumber(q(1, 4))).rational(), q(1));
  EXPECT_EQ((a * a).rational(), q(9, 16));
  EXPECT_EQ(alg_inv(a).rational(), q(4, 3));
  EXPECT_THROW(alg_inv(AlgebraicNumber(0)), DivisionByZero);
}

TEST(Algebraic, ArithmeticExamples) {
  EXPECT_TRUE(alg_is_zero(alg_add(sqrt2(), alg_neg(sqrt2()))));
  const AlgebraicNumber ii = alg_mul(unit_i(), unit_i());
  ASSERT_TRUE(ii.is_rational());
  EXPECT_EQ(ii.rational(), q(-1));
  const AlgebraicNumber l = AlgebraicNumber::gaussian(q(-3, 5), q(4, 5));
  const AlgebraicNumber prod = alg_mul(l, AlgebraicNumber::gaussian(q(-3, 5), q(-4, 5)));
  EXPECT_TRUE(alg_equals(prod, AlgebraicNumber(1)));
  EXPECT_TRUE(alg_equals(alg_mul(l, alg_conj(l)), AlgebraicNumber(1)));
}

TEST(Algebraic, PredicateExamples) {
  EXPECT_TRUE(alg_equals(alg_mul(sqrt2(), sqrt2()), AlgebraicNumber(2)));
  const AlgebraicNumber one_plus_i = AlgebraicNumber::gaussian(q(1), q(1));
  EXPECT_EQ(compare_modulus(one_plus_i, sqrt2()), 0);
  EXPECT_EQ(compare_modulus(AlgebraicNumber::gaussian(q(-3, 5), q(4, 5)), AlgebraicNumber(1)), 0);
  EXPECT_EQ(compare_modulus(AlgebraicNumber(2), sqrt2()), 1);
  EXPECT_EQ(compare_modulus(AlgebraicNumber(q(-1, 2)), unit_i()), -1);
  EXPECT_EQ(alg_sign_real(alg_neg(sqrt2())), -1);
  EXPECT_EQ(alg_sign_real(sqrt2() - AlgebraicNumber(q(141, 100))), 1);
  EXPECT_THROW(alg_sign_real(unit_i()), InvalidInput);
}

TEST(Algebraic, RootOfUnityExamples) {
  EXPECT_EQ(is_root_of_unity(AlgebraicNumber(-1)), 2U);
  EXPECT_EQ(is_root_of_unity(unit_i()), 4U);
  EXPECT_FALSE(is_root_of_unity(AlgebraicNumber::gaussian(q(-3, 5), q(4, 5))).has_value());
  EXPECT_THROW(is_root_of_unity(AlgebraicNumber(0)), InvalidInput);
  EXPECT_FALSE(is_root_of_unity(AlgebraicNumber(2)).has_value());
  EXPECT_FALSE(is_root_of_unity(sqrt2()).has_value());
}

TEST(Algebraic, UnitRootsHaveTheirOrder) {
  for (unsigned n = 1; n <= 24; ++n) {
    for (unsigned k = 0; k < n; ++k) {
      if (std::gcd(n, k) != 1 && !(n == 1 && k == 0)) continue;
      const AlgebraicNumber z = AlgebraicNumber::unit_root(q(k, n));
      ASSERT_EQ(is_root_of_unity(z), n) << k << "/" << n;
      // oracle: repeated multiplication
      AlgebraicNumber acc = z;
      for (unsigned m = 1; m < n; ++m) {
        EXPECT_FALSE(alg_equals(acc, AlgebraicNumber(1))) << k << "/" << n << " power " << m;
        acc = alg_mul(acc, z);
      }
      EXPECT_TRUE(alg_equals(acc, AlgebraicNumber(1)));
      if (k > 0) break;  // one primitive root per order keeps this fast
    }
  }
}

TEST(Algebraic, PowerMatchesRepeatedProduct) {
  const AlgebraicNumber l = AlgebraicNumber::gaussian(q(-3, 5), q(4, 5));
  AlgebraicNumber acc(1);
  for (long n = 1; n <= 6; ++n) {
    acc = alg_mul(acc, l);
    EXPECT_TRUE(alg_equals(alg_pow(l, n), acc)) << n;
  }
  EXPECT_TRUE(alg_equals(alg_pow(l, -1), alg_conj(l)));
  EXPECT_TRUE(alg_equals(alg_pow(l, 2), AlgebraicNumber::gaussian(q(-7, 25), q(-24, 25))));
}

TEST(Algebraic, SqrtAbsReIm) {
  const AlgebraicNumber l = AlgebraicNumber::gaussian(q(1), q(2));
  EXPECT_TRUE(alg_equals(alg_re(l), AlgebraicNumber(1)));
  EXPECT_TRUE(alg_equals(alg_im(l), AlgebraicNumber(2)));
  const AlgebraicNumber m = alg_abs(l);
  EXPECT_TRUE(alg_equals(alg_mul(m, m), AlgebraicNumber(5)));
  EXPECT_EQ(alg_sign_real(m), 1);
  EXPECT_TRUE(alg_sqrt(AlgebraicNumber(q(9, 4))).is_rational());
  EXPECT_THROW(alg_sqrt(AlgebraicNumber(-1)), InvalidInput);
}

TEST(Algebraic, EvalRationalFunction) {
  // (x + 1) / (x - 1) at sqrt2 = 3 + 2 sqrt2
  const AlgebraicNumber v = alg_eval(UniPoly{q(1), q(1)}, UniPoly{q(-1), q(1)}, sqrt2());
  EXPECT_TRUE(alg_equals(v, AlgebraicNumber(3) + AlgebraicNumber(2) * sqrt2()));
  EXPECT_THROW(alg_eval(UniPoly{q(1)}, UniPoly{q(-2), q(0), q(1)}, sqrt2()), DivisionByZero);
}

TEST(Algebraic, InverseAndNegationIdentities) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const AlgebraicNumber a = random_algebraic(rng, 4);
    if (alg_is_zero(a)) continue;
    EXPECT_TRUE(alg_equals(alg_mul(a, alg_inv(a)), AlgebraicNumber(1))) << a.str();
    EXPECT_TRUE(alg_is_zero(alg_add(a, alg_neg(a)))) << a.str();
  }
}

TEST(Algebraic, OperationsEncloseNumericResult) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const AlgebraicNumber a = random_algebraic(rng, 3);
    const AlgebraicNumber b = random_algebraic(rng, 3);
    // coarse outward enclosures of the operands, taken before any further refinement,
    // must contain the exact result
    const ComplexInterval ea = a.enclose(40);
    const ComplexInterval eb = b.enclose(40);
    const AlgebraicNumber s = alg_add(a, b);
    const AlgebraicNumber p = alg_mul(a, b);
    EXPECT_TRUE(contains(ea + eb, s.enclose(200))) << a.str() << " + " << b.str();
    EXPECT_TRUE(contains(ea * eb, p.enclose(200))) << a.str() << " * " << b.str();
    EXPECT_TRUE(alg_equals(alg_add(s, alg_neg(b)), a));
  }
}

TEST(Algebraic, CompareModulusConsistentWithEnclosures) {
  std::mt19937_64 rng(8);
  std::vector<AlgebraicNumber> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(random_algebraic(rng, 3));
  xs.push_back(AlgebraicNumber::gaussian(q(3), q(4)));
  xs.push_back(AlgebraicNumber(-5));
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      const int c = compare_modulus(a, b);
      EXPECT_EQ(c, -compare_modulus(b, a));
      const double ma = std::hypot(a.approx_re(), a.approx_im());
      const double mb = std::hypot(b.approx_re(), b.approx_im());
      if (ma < mb - 1e-9) EXPECT_EQ(c, -1);
      if (ma > mb + 1e-9) EXPECT_EQ(c, 1);
    }
  }
  EXPECT_EQ(compare_modulus(xs[xs.size() - 2], xs.back()), 0);
}

TEST(Algebraic, RootsOfOrdering) {
  const auto r = roots_of(UniPoly{q(-1), q(1), q(-1), q(1)});  // (x - 1)(x^2 + 1)
  ASSERT_EQ(r.size(), 3U);
  EXPECT_TRUE(r[0].is_rational());
  EXPECT_EQ(r[0].rational(), q(1));
  EXPECT_FALSE(r[1].is_real());
  EXPECT_TRUE(alg_equals(r[1], alg_conj(r[2])));
  const auto fib = roots_of(UniPoly{q(-1), q(-1), q(1)});
  ASSERT_EQ(fib.size(), 2U);
  EXPECT_LT(fib[0].approx_re(), fib[1].approx_re());
  EXPECT_TRUE(fib[0].minimal());
}

TEST(Algebraic, SumAndProductDefiningPolynomialsDivideResultants) {
  // independent route: bivariate resultant elimination
  std::mt19937_64 rng(12);
  for (int i = 0; i < 15; ++i) {
    const AlgebraicNumber a = random_algebraic(rng, 3);
    const AlgebraicNumber b = random_algebraic(rng, 3);
    if (a.is_rational() || b.is_rational()) continue;
    BiPoly pa;
    for (const Rational& c : a.defining().coeffs()) pa.terms.push_back(UniPoly::constant(c));
    const UniPoly& qb = b.defining();
    const int n = qb.degree();
    BiPoly shifted, homog;
    shifted.terms.resize(static_cast<std::size_t>(n) + 1);
    homog.terms.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      const Rational ck = qb[static_cast<std::size_t>(k)];
      homog.terms[static_cast<std::size_t>(n - k)] = UniPoly::monomial(ck, static_cast<std::size_t>(k));
      Rational binom(1);
      for (int j = 0; j <= k; ++j) {
        const Rational coeff = (j % 2 == 0) ? Rational(ck * binom) : Rational(-ck * binom);
        shifted.terms[static_cast<std::size_t>(j)] += UniPoly::monomial(coeff, static_cast<std::size_t>(k - j));
        binom = binom * (k - j) / (j + 1);
      }
    }
    const UniPoly rs = resultant_bivariate(pa, shifted);
    const UniPoly rp = resultant_bivariate(pa, homog);
    EXPECT_TRUE((rs % alg_add(a, b).defining()).is_zero());
    EXPECT_TRUE((rp % alg_mul(a, b).defining()).is_zero());
  }
}
