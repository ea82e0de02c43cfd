#include <gtest/gtest.h>

#include "fangood/matching.hpp"
#include "fangood/subgraph.hpp"
#include "support/brute.hpp"

using namespace fangood;

namespace {

void expect_blue_matching(const TwoColoring& c, const VertexSet& u, const std::vector<Edge>& m) {
  std::vector<bool> used(c.order(), false);
  for (auto [a, b] : m) {
    EXPECT_TRUE(u.test(a) && u.test(b));
    EXPECT_TRUE(c.is_blue(a, b));
    EXPECT_FALSE(used[a] || used[b]);
    used[a] = used[b] = true;
  }
}

}  // namespace

TEST(BlueMatching, ExhaustiveOnSixVertices) {
  for (std::uint64_t code = 0; code < (1u << 15); ++code) {
    TwoColoring c = brute::from_code(6, code);
    const VertexSet all = VertexSet::full(6);
    auto m = max_blue_matching_in(c, all);
    expect_blue_matching(c, all, m);
    ASSERT_EQ(m.size(), brute::max_matching(brute::blue_matrix(c), {0, 1, 2, 3, 4, 5})) << code;
  }
}

TEST(BlueMatching, RandomInducedOnEightVertices) {
  Rng rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    TwoColoring c = random_coloring(14, rng, uniform_unit(rng));
    std::vector<VertexId> pick;
    std::vector<std::size_t> as_size;
    for (VertexId v = 0; v < 14 && pick.size() < 8; ++v)
      if (bernoulli(rng, 0.6)) {
        pick.push_back(v);
        as_size.push_back(v);
      }
    const VertexSet u = VertexSet::of(14, std::span<const VertexId>(pick));
    auto m = max_blue_matching_in(c, u);
    expect_blue_matching(c, u, m);
    ASSERT_EQ(m.size(), brute::max_matching(brute::blue_matrix(c), as_size));
  }
}

TEST(BlueMatching, LimitStopsEarly) {
  TwoColoring c = TwoColoring::all_blue(10);
  EXPECT_EQ(max_blue_matching_in(c, VertexSet::full(10)).size(), 5u);
  EXPECT_EQ(max_blue_matching_in(c, VertexSet::full(10), 2).size(), 2u);
  EXPECT_TRUE(max_blue_matching_in(TwoColoring::all_red(10), VertexSet::full(10)).empty());
}

TEST(Kuhn, MatchesBruteForceOnRandomBipartite) {
  Rng rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t a = 1 + uniform_below(rng, 5), b = 1 + uniform_below(rng, 5);
    std::vector<std::vector<std::size_t>> adj(a);
    brute::Matrix m(a + b, std::vector<char>(a + b, 0));
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < b; ++y)
        if (bernoulli(rng, 0.4)) {
          adj[x].push_back(y);
          m[x][a + y] = m[a + y][x] = 1;
        }
    auto r = kuhn_matching(adj, b);
    std::vector<std::size_t> all(a + b);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    EXPECT_EQ(r.size, brute::max_matching(m, all));
    for (std::size_t x = 0; x < a; ++x)
      if (r.x_to_y[x] != SIZE_MAX) { EXPECT_EQ(r.y_to_x[r.x_to_y[x]], x); }
  }
}

TEST(RedEmbedding, AgreesWithInjectionSearch) {
  Rng rng(21);
  const std::vector<Graph> patterns{path_graph(4), star_graph(4), cycle_graph(4), complete_graph(3),
                                    fan_graph(1), Graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}})};
  for (int trial = 0; trial < 400; ++trial) {
    TwoColoring c = random_coloring(7, rng, 0.25 + 0.5 * uniform_unit(rng));
    for (const Graph& g : patterns) {
      EmbedResult r = embed_red(c, g);
      const bool expect = brute::contains(brute::red_matrix(c), g);
      ASSERT_EQ(r.status == SearchStatus::Found, expect);
      if (expect) {
        for (auto [u, v] : g.edges()) { EXPECT_TRUE(c.is_red(r.image[u], r.image[v])); }
      }
    }
  }
}

TEST(RedEmbedding, RespectsHostAndPartialMap) {
  TwoColoring c = TwoColoring::all_red(8);
  const VertexSet host = VertexSet::of(8, {2, 4, 6});
  EmbedResult r = embed_red(c, path_graph(3), host);
  ASSERT_EQ(r.status, SearchStatus::Found);
  for (VertexId x : r.image) { EXPECT_TRUE(host.test(x)); }
  EXPECT_EQ(embed_red(c, path_graph(4), host).status, SearchStatus::Absent);
  std::vector<VertexId> partial{kNoVertex, 6, kNoVertex};
  r = embed_red(c, path_graph(3), host, partial);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.image[1], 6u);
}

TEST(RedEmbedding, BudgetIsReported) {
  // Red K_{5,5}: no triangle, and proving that takes many nodes.
  TwoColoring c(10);
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = 5; v < 10; ++v) c.set_red(u, v);
  EXPECT_EQ(embed_red(c, complete_graph(3), 2).status, SearchStatus::BudgetExceeded);
  EXPECT_EQ(embed_red(c, complete_graph(3)).status, SearchStatus::Absent);
}
