#include <gtest/gtest.h>

#include "fangood/bounds.hpp"
#include "support/brute.hpp"

using namespace fangood;

namespace {

// Plain fractions over __int128, reduced by gcd, for cross-checking.
struct Frac {
  __int128 p, q;
};

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  while (b) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Frac make(__int128 p, __int128 q) {
  if (q < 0) p = -p, q = -q;
  const __int128 g = gcd128(p, q);
  return {p / g, q / g};
}

bool same(const Rational& r, Frac f) {
  return boost::multiprecision::numerator(r) == BigInt(static_cast<long long>(f.p)) &&
         boost::multiprecision::denominator(r) == BigInt(static_cast<long long>(f.q));
}

Frac g_of(__int128 k, __int128 c) { return make((2 * c + 12) * k * k * k + (c + 30) * k * k - 4 * k - 9, 1); }
Frac f_of(__int128 k, __int128 c) {
  return make((8 * k * k * k + 4 * k * k - 36 * k + 19) * g_of(k, c).p, c * k * k);
}
// G with c/4 kept exact: multiply through by 4.
Frac G_of(__int128 k, __int128 t, __int128 c) {
  return make(4 * (2 * (c + 6) * k * k * k * t + (c + 30) * k * k * t - 6 * k * k + 18 * k * t +
                   3 * t - 13 * k - 6) + c,
              4);
}
Frac F_of(__int128 k, __int128 t, __int128 c) {
  Frac G = G_of(k, t, c);
  return make((8 * k * t + 34 * t - 6) * G.p, c * G.q);
}

}  // namespace

TEST(Formulas, KnownValues) {
  auto s = section6_eval(1, 1, Rational(96));
  EXPECT_EQ(s.g, Rational(317));
  EXPECT_EQ(s.f, Rational(-1585, 96));
  EXPECT_EQ(s.G, Rational(350));
  EXPECT_EQ(to_string(s.f), "-1585/96");
  EXPECT_EQ(to_string(Rational(6)), "6");
}

TEST(Formulas, AgreeWithIndependentFractions) {
  for (long long k = 1; k <= 12; ++k)
    for (long long t = 1; t <= 6; ++t)
      for (long long c : {1LL, 7LL, 96LL, 200LL}) {
        auto s = section6_eval(k, t, Rational(c));
        EXPECT_TRUE(same(s.g, g_of(k, c)));
        EXPECT_TRUE(same(s.f, f_of(k, c)));
        EXPECT_TRUE(same(s.G, G_of(k, t, c)));
        EXPECT_TRUE(same(s.F, F_of(k, t, c)));
      }
}

TEST(Formulas, ParameterizedThresholdsSitBelowHeadlines) {
  for (long long k = 1; k <= 20; ++k) {
    auto s1 = section6_eval(k, 1, Rational(96));
    EXPECT_EQ(s1.g + 4 * k + 9, Rational(204 * k * k * k + 126 * k * k));
    EXPECT_LE(s1.f, Rational(36 * k * k * k * k));
    for (long long t = 1; t <= 10; ++t) {
      auto s = section6_eval(k, t, Rational(96));
      EXPECT_LE(s.G, Rational(204 * t * k * k * k + 147 * t * k * k));
      EXPECT_LE(s.F, Rational(161 * t * t * k * k * k * k));
    }
  }
}

TEST(Formulas, RejectNonPositiveInputs) {
  EXPECT_THROW(section6_eval(0, 1, Rational(96)), HypothesisError);
  EXPECT_THROW(section6_eval(1, 1, Rational(0)), HypothesisError);
  EXPECT_THROW(burr_lower_bound(2, 1, 3), HypothesisError);
  EXPECT_THROW(lemma26_upper(1, 0, 1), HypothesisError);
}

TEST(Bounds, SimpleValues) {
  EXPECT_EQ(burr_lower_bound(4, 2, 1), 7);
  EXPECT_EQ(burr_lower_bound(10, 1, 3), 21);
  EXPECT_EQ(lemma26_upper(3, 2, 1), Rational(17, 3));  // 3 + 4 - 4/3
  EXPECT_EQ(cor52_upper(5, 2, 3), 9 + 2 * 5);
  EXPECT_EQ(cor53_upper(3, 2, 1, 2), Rational(17, 3) + 3);
}

TEST(Applicability, SpecExamples) {
  // n = 36, m = 37, k = 1: two extra edges already break the edge bound.
  Graph g = random_sparse_connected(36, 1, 4);
  ASSERT_EQ(g.size(), 37u);
  BoundsReport r = applicability(g, 1, 1);
  const auto& a15 = r.applicable[4];
  EXPECT_EQ(a15.theorem, "1.5");
  EXPECT_FALSE(a15.applies);

  BoundsReport s = applicability(star_graph(26), 1, 2);
  ASSERT_TRUE(s.chosen);
  EXPECT_EQ(*s.chosen, "1.6");
  EXPECT_EQ(s.theorem_value, 52);
}

TEST(Applicability, PriorityPrefersEarlierTheorems) {
  BoundsReport r = applicability(path_graph(40), 1, 1);
  ASSERT_TRUE(r.chosen);
  EXPECT_EQ(*r.chosen, "1.1");
  BoundsReport s = applicability(star_graph(10), 2, 1);
  EXPECT_EQ(*s.chosen, "1.2");
  BoundsReport none = applicability(cycle_graph(10), 1, 1);
  EXPECT_FALSE(none.chosen);
  EXPECT_FALSE(none.theorem_value);
  EXPECT_THROW(applicability(matching_graph(2), 1, 1), HypothesisError);
}

TEST(Applicability, TheoremValueEqualsBurrBound) {
  Rng rng(17);
  int applicable = 0;
  for (int trial = 0; trial < 400 && applicable < 100; ++trial) {
    const long long k = 1 + static_cast<long long>(uniform_below(rng, 2));
    const long long t = 1 + static_cast<long long>(uniform_below(rng, 2));
    const std::size_t n = 10 + uniform_below(rng, 60);
    Graph g = uniform_below(rng, 2) ? star_graph(n)
                                    : random_sparse_connected(n, -1, rng());
    BoundsReport r = applicability(g, k, t);
    if (!r.theorem_value) continue;
    ++applicable;
    EXPECT_EQ(*r.theorem_value, burr_lower_bound(static_cast<long long>(n), k, t));
  }
  EXPECT_GE(applicable, 50);
}

TEST(Extremal, ShapeAndAvoidance) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t t = 1; t <= 2; ++t) {
        TwoColoring c = build_extremal_coloring(n, k, t);
        EXPECT_EQ(c.order(), 2 * n + t - 3);
        EXPECT_LT(brute::largest_component(brute::red_matrix(c)), n);
        EXPECT_FALSE(brute::has_tfan(brute::blue_matrix(c), k, t));
      }
  TwoColoring c = build_extremal_coloring(4, 1, 2);
  EXPECT_TRUE(c.is_red(0, 2));
  EXPECT_TRUE(c.is_red(3, 5));
  EXPECT_FALSE(c.is_red(2, 3));
  EXPECT_FALSE(c.is_red(6, 0));
}
