#include <gtest/gtest.h>

#include "fangood/graph6.hpp"
#include "fangood/oracle.hpp"
#include "support/brute.hpp"
#include "support/colorings.hpp"

using namespace fangood;

namespace {

std::vector<Graph> small_patterns() {
  return {path_graph(3), path_graph(4), star_graph(4), cycle_graph(4), complete_graph(3),
          Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}})};
}

}  // namespace

TEST(Detection, RedSubgraphAgreesWithInjections) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    TwoColoring c = random_coloring(8, rng, uniform_unit(rng));
    for (const Graph& g : small_patterns()) {
      auto r = find_red_subgraph(c, g);
      ASSERT_EQ(r.has_value(), brute::contains(brute::red_matrix(c), g));
      if (r) { EXPECT_TRUE(verify_certificate(c, g, 1, 1, RedEmbedding{*r}).ok); }
    }
  }
}

TEST(Detection, BlueFansAgreeWithBruteForce) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    TwoColoring c = random_coloring(10, rng, 0.1 + 0.5 * uniform_unit(rng));
    const auto blue = brute::blue_matrix(c);
    for (std::size_t k : {1u, 2u})
      for (std::size_t t : {1u, 2u, 3u}) {
        auto f = find_blue_tfans(c, k, t);
        ASSERT_EQ(f.has_value(), brute::has_tfan(blue, k, t)) << k << " " << t;
        if (f) { EXPECT_TRUE(verify_certificate(c, Graph(1), k, t, *f).ok); }
      }
  }
}

TEST(Detection, LargestRedComponent) {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    TwoColoring c = random_coloring(12, rng, 0.3 * uniform_unit(rng));
    EXPECT_EQ(largest_red_component(c), brute::largest_component(brute::red_matrix(c)));
  }
}

TEST(TfanGraph, Shape) {
  Graph h = tfan_graph(2, 3);
  EXPECT_EQ(h.order(), 15u);
  EXPECT_EQ(h.size(), 18u);
  EXPECT_EQ(tfan_graph(1, 1), fan_graph(1));
}

// Isomorph reduction must not change answers: compare with full enumeration.
TEST(Enumeration, ReducedSearchAgreesWithFullEnumeration) {
  for (const Graph& g : small_patterns())
    for (std::size_t k : {1u, 2u})
      for (std::size_t t : {1u, 2u})
        for (std::size_t N = 1; N <= 5; ++N) {
          const bool reduced = arrows(N, g, FanSpec(k, t)).arrows;
          ASSERT_EQ(reduced, brute::arrows(N, g, k, t))
              << write_graph6(g) << " k=" << k << " t=" << t << " N=" << N;
        }
}

TEST(Enumeration, AgreesAtOrderSixForPathVersusTriangle) {
  EXPECT_EQ(arrows(6, path_graph(4), FanSpec(1)).arrows, brute::arrows(6, path_graph(4), 1, 1));
  EXPECT_EQ(arrows(6, star_graph(4), FanSpec(1)).arrows, brute::arrows(6, star_graph(4), 1, 1));
}

TEST(Enumeration, WitnessAvoidsBothTargets) {
  for (const Graph& g : small_patterns()) {
    RamseyResult r = ramsey_exact(g, FanSpec(1), 8);
    ASSERT_TRUE(r.value);
    ArrowResult below = arrows(*r.value - 1, g, FanSpec(1));
    ASSERT_FALSE(below.arrows);
    ASSERT_TRUE(below.stats.witness);
    const TwoColoring& w = *below.stats.witness;
    EXPECT_FALSE(brute::contains(brute::red_matrix(w), g));
    EXPECT_FALSE(brute::has_tfan(brute::blue_matrix(w), 1, 1));
  }
}

TEST(Enumeration, DeterministicAcrossThreadCounts) {
  for (std::size_t threads : {1u, 2u, 3u}) {
    ArrowResult r = arrows(6, path_graph(4), FanSpec(1), kOracleDefaultCeiling, threads);
    ArrowResult ref = arrows(6, path_graph(4), FanSpec(1));
    EXPECT_EQ(r.arrows, ref.arrows);
    EXPECT_EQ(r.stats.classes_per_order, ref.stats.classes_per_order);
    ASSERT_TRUE(r.stats.witness && ref.stats.witness);
    EXPECT_EQ(*r.stats.witness, *ref.stats.witness);
  }
}

TEST(Enumeration, SmallRamseyNumbers) {
  EXPECT_EQ(ramsey_exact(path_graph(3), FanSpec(1), 8).value, 5u);
  EXPECT_EQ(ramsey_exact(complete_graph(3), FanSpec(1), 8).value, 6u);  // classical R(3,3)
  EXPECT_EQ(ramsey_exact(path_graph(2), FanSpec(1), 8).value, 3u);
  EXPECT_FALSE(ramsey_exact(complete_graph(4), FanSpec(2), 5).value);
}

TEST(Enumeration, CeilingIsEnforced) {
  EXPECT_THROW(arrows(9, path_graph(3), FanSpec(1)), HypothesisError);
  EXPECT_THROW(arrows(9, path_graph(3), FanSpec(1), 12), HypothesisError);
  EXPECT_NO_THROW(arrows(9, path_graph(3), FanSpec(1), 9));
}

TEST(IndependenceNumber, AgreesWithSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + uniform_below(rng, 14);
    std::vector<Edge> es;
    const double p = uniform_unit(rng);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (bernoulli(rng, p)) es.emplace_back(u, v);
    Graph g(n, es);
    EXPECT_EQ(independence_number(g), brute::independence_number(g));
  }
  EXPECT_THROW(independence_number(Graph(41)), HypothesisError);
}

TEST(Canonical, RelabellingGivesSameCanonicalCode) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    TwoColoring c = random_coloring(7, rng);
    TwoColoring d = gen::shuffled(c, rng);
    auto a = iso::refine(SmallColoring::from(c)), b = iso::refine(SmallColoring::from(d));
    EXPECT_EQ(iso::invariant(a), iso::invariant(b));
    EXPECT_TRUE(iso::isomorphic(SmallColoring::from(c), a, SmallColoring::from(d), b));
  }
}
