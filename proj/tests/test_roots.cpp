#include <gtest/gtest.h>

#include <random>

#include "upos/errors.hpp"
#include "upos/roots.hpp"

using namespace upos;

namespace {

Rational q(long n, long d = 1) { return ratio(n, d); }

bool holds(const Box& b, const Rational& re, const Rational& im) {
  return b.re_lo <= re && re <= b.re_hi && b.im_lo <= im && im <= b.im_hi;
}

void expect_valid(const UniPoly& p, const std::vector<Box>& boxes) {
  const Rational gap = mignotte_gap(p);
  ASSERT_EQ(static_cast<int>(boxes.size()), p.degree());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    EXPECT_LT(boxes[i].size(), gap);
    for (std::size_t j = i + 1; j < boxes.size(); ++j) EXPECT_FALSE(boxes[i].overlaps(boxes[j]));
    if (boxes[i].is_real() && boxes[i].re_lo != boxes[i].re_hi) {
      EXPECT_LT(sign(p.eval(boxes[i].re_lo)) * sign(p.eval(boxes[i].re_hi)), 0);
    }
  }
}

}  // namespace

TEST(IsolateRoots, SqrtTwo) {
  const UniPoly p{q(-2), q(0), q(1)};
  const auto boxes = isolate_roots(p);
  expect_valid(p, boxes);
  ASSERT_TRUE(boxes[0].is_real() && boxes[1].is_real());
  // sign-change oracle: x^2 - 2 changes sign inside each box, and 1.414 < sqrt2 < 1.415
  EXPECT_LT(boxes[0].re_hi, q(0));
  EXPECT_GT(boxes[1].re_lo, q(0));
  EXPECT_LE(boxes[1].re_lo, q(1415, 1000));
  EXPECT_GE(boxes[1].re_hi, q(1414, 1000));
  EXPECT_LE(boxes[0].re_lo, q(-1414, 1000));
  EXPECT_GE(boxes[0].re_hi, q(-1415, 1000));
}

TEST(IsolateRoots, ImaginaryUnit) {
  const UniPoly p{q(1), q(0), q(1)};
  const auto boxes = isolate_roots(p);
  expect_valid(p, boxes);
  EXPECT_TRUE(holds(boxes[0], q(0), q(1)));
  EXPECT_TRUE(holds(boxes[1], q(0), q(-1)));
}

TEST(IsolateRoots, MixedCubic) {
  const UniPoly p{q(-1), q(1), q(-1), q(1)};
  const auto boxes = isolate_roots(p);
  expect_valid(p, boxes);
  EXPECT_EQ(boxes[0], Box::point(q(1)));
  EXPECT_TRUE(holds(boxes[1], q(0), q(1)));
  EXPECT_TRUE(holds(boxes[2], q(0), q(-1)));
}

TEST(IsolateRoots, RejectsNonSquarefree) {
  EXPECT_THROW(isolate_roots(UniPoly{q(1), q(-2), q(1)}), InvalidInput);
  EXPECT_THROW(isolate_roots(UniPoly{}), InvalidInput);
}

TEST(IsolateRoots, KnownGaussianRationalRoots) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    // roots a +- b i with small rational parts, and rational real roots
    std::vector<std::pair<Rational, Rational>> roots;
    UniPoly p{q(1)};
    const int pairs = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < pairs; ++k) {
      const Rational a = q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      const Rational b = q(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
      bool dup = false;
      for (auto& r : roots) dup = dup || (r.first == a && r.second == b);
      if (dup) continue;
      roots.emplace_back(a, b);
      roots.emplace_back(a, -b);
      p = p * UniPoly{a * a + b * b, -2 * a, q(1)};
    }
    const Rational r = q(static_cast<long>(rng() % 11) - 5, 3);
    roots.emplace_back(r, q(0));
    p = p * UniPoly{-r, q(1)};
    const auto boxes = isolate_roots(p);
    expect_valid(p, boxes);
    for (auto& [re, im] : roots) {
      int hits = 0;
      for (const Box& b : boxes) hits += holds(b, re, im) ? 1 : 0;
      EXPECT_EQ(hits, 1) << p.str();
    }
  }
}

TEST(IsolateRoots, RandomSquarefreeCountsMatchDegree) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  int tested = 0;
  while (tested < 100) {
    const int d = 1 + static_cast<int>(rng() % 6);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = dist(rng);
    if (c.back() == 0) c.back() = 1;
    const UniPoly p(c);
    if (!is_squarefree(p)) continue;
    ++tested;
    const auto boxes = isolate_roots(p);
    expect_valid(p, boxes);
    int real = 0;
    for (const Box& b : boxes) real += b.is_real() ? 1 : 0;
    EXPECT_EQ(real, real_root_count(p));
    // Sturm counts over a partition of a bounding interval add up to the real count
    const Rational bound = root_bound(p) + 1;
    int total = 0;
    Rational lo = -bound;
    for (int k = 1; k <= 4; ++k) {
      Rational hi = -bound + bound * q(k, 2);
      while (p.eval(hi) == 0) hi += q(1, 1000);
      if (k == 4) hi = std::max<Rational>(hi, bound);
      total += sturm_count(p, lo, hi);
      lo = hi;
    }
    EXPECT_EQ(total, real);
  }
}

TEST(RefineRoot, ShrinksAndKeepsRoot) {
  const UniPoly p{q(5), q(-2), q(0), q(1)};  // x^3 - 2x + 5
  const auto boxes = isolate_roots(p);
  expect_valid(p, boxes);
  const Rational target = q(1, 1L << 40);
  for (const Box& b : boxes) {
    const Box r = refine_root(p, b, target);
    EXPECT_LE(r.size(), target);
    EXPECT_TRUE(r.overlaps(b));
    const ComplexInterval v = p.eval(r.enclose(256));
    EXPECT_TRUE(v.contains_zero());
  }
}

TEST(RefineRoot, ExactRationalRootCollapses) {
  const UniPoly p{q(-1), q(0), q(4)};  // roots +-1/2
  const auto boxes = isolate_roots(p);
  ASSERT_EQ(boxes.size(), 2U);
  const Box r = refine_root(p, boxes[1], q(1, 1L << 50));
  EXPECT_TRUE(r.contains(Box::point(q(1, 2))));
}
