#include <gtest/gtest.h>

#include <functional>

#include "fangood/graph6.hpp"
#include "fangood/sparse.hpp"
#include "support/brute.hpp"

using namespace fangood;

namespace {

// Longest path (in vertices) whose interior vertices all have degree 2.
std::size_t brute_longest_suspended(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n ? 1 : 0;
  std::vector<char> on(n, 0);
  std::function<void(VertexId, std::size_t)> walk = [&](VertexId v, std::size_t len) {
    best = std::max(best, len);
    if (len > 1 && g.degree(v) != 2) return;  // v would become interior
    for (VertexId w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      walk(w, len + 1);
      on[w] = 0;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on[s] = 1;
    walk(s, 1);
    on[s] = 0;
  }
  return best;
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out;
  for (std::size_t n = 4; n <= 9; ++n)
    for (std::uint64_t seed = 0; seed < 30; ++seed)
      out.push_back(random_sparse_connected(n, static_cast<long long>(seed % 4) - 1, seed * 31 + n));
  out.push_back(cycle_graph(7));
  out.push_back(path_graph(6));
  out.push_back(star_graph(6));
  out.push_back(Graph(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}}));
  return out;
}

bool is_path_in(const Graph& g, const std::vector<VertexId>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

}  // namespace

TEST(Peel, TreesVanishAndCoresHaveMinDegreeTwo) {
  for (const Graph& g : sample_graphs()) {
    PeelResult r = peel_degree_one(g);
    EXPECT_EQ(r.removal_order.size() + r.core_vertices.size(), g.order());
    if (r.core.order()) { EXPECT_GE(r.core.min_degree(), 2u); }
    if (is_connected(g) && g.size() + 1 == g.order()) { EXPECT_EQ(r.core.order(), 0u); }
    // Each removed vertex had at most one surviving neighbour: its parent.
    std::vector<bool> gone(g.order(), false);
    for (std::size_t i = 0; i < r.removal_order.size(); ++i) {
      const VertexId v = r.removal_order[i];
      std::size_t alive = 0;
      for (VertexId w : g.neighbors(v)) alive += !gone[w];
      EXPECT_LE(alive, 1u);
      if (alive == 1) { EXPECT_TRUE(g.adjacent(v, r.parent[i])); }
      gone[v] = true;
    }
  }
}

TEST(Peel, SmallestIdFirst) {
  PeelResult r = peel_degree_one(path_graph(4));
  EXPECT_EQ(r.removal_order, (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(SuspendedPaths, LongestMatchesBruteForce) {
  for (const Graph& g : sample_graphs()) {
    if (has_isolated_vertex(g)) continue;
    EXPECT_EQ(longest_suspended_path(g), brute_longest_suspended(g)) << write_graph6(g);
  }
}

TEST(SuspendedPaths, ChainsAreSuspended) {
  for (const Graph& g : sample_graphs())
    for (const auto& c : suspended_chains(g)) {
      EXPECT_TRUE(is_path_in(g, c.vertices));
      if (c.closed) { EXPECT_TRUE(g.adjacent(c.vertices.front(), c.vertices.back())); }
      for (std::size_t i = 1; i + 1 < c.vertices.size(); ++i) { EXPECT_EQ(g.degree(c.vertices[i]), 2u); }
    }
}

TEST(SuspendedPaths, CycleIsOneClosedChain) {
  auto chains = suspended_chains(cycle_graph(6));
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_TRUE(chains[0].closed);
  EXPECT_EQ(chains[0].order(), 6u);
}

TEST(Shortening, KeepsConnectivityAndShrinksChain) {
  for (const Graph& g : sample_graphs()) {
    for (const auto& c : suspended_chains(g)) {
      if (c.interior() < 2 || c.order() < 4) continue;
      ShortenResult r = shorten_chain(g, c, 1);
      EXPECT_EQ(r.graph.order() + 1, g.order());
      EXPECT_EQ(is_connected(r.graph), is_connected(g));
      EXPECT_EQ(r.graph.size() + 1, g.size());
      // Degrees of survivors are unchanged.
      for (VertexId v = 0; v < r.graph.order(); ++v)
        EXPECT_EQ(r.graph.degree(v), g.degree(r.kept[v]));
    }
  }
}

TEST(Shortening, CapBoundsEveryChain) {
  Graph g = build_named({Family::Path, 20});
  ShortenResult r = shorten_suspended_paths(g, 5);
  EXPECT_EQ(r.graph.order(), 5u);
  EXPECT_EQ(longest_suspended_path(r.graph), 5u);
  EXPECT_THROW(shorten_suspended_paths(g, 2), std::invalid_argument);
}

TEST(EndEdges, MaximumMatchesBruteForce) {
  for (const Graph& g : sample_graphs()) {
    brute::Matrix m(g.order(), std::vector<char>(g.order(), 0));
    for (auto [u, v] : g.edges())
      if (g.degree(u) == 1 || g.degree(v) == 1) m[u][v] = m[v][u] = 1;
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto got = max_end_edge_matching(g);
    EXPECT_EQ(got.size(), brute::max_matching(m, all));
    std::vector<bool> used(g.order(), false);
    for (auto [s, l] : got) {
      EXPECT_EQ(g.degree(l), 1u);
      EXPECT_TRUE(g.adjacent(s, l));
      EXPECT_FALSE(used[s] || used[l]);
      used[s] = used[l] = true;
    }
  }
}

TEST(DegreeOne, LowerBoundHoldsWithoutLongSuspendedPaths) {
  for (std::size_t n = 10; n <= 80; n += 7)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Graph g = random_sparse_connected(n, static_cast<long long>(seed % 5) - 1, seed + 1000 * n);
      const std::size_t q = std::max<std::size_t>(3, longest_suspended_path(g));
      EXPECT_GE(static_cast<long long>(count_degree_one(g)), degree_one_lower_bound(g, q));
    }
}

TEST(Trichotomy, OutcomeIsValidAndStarCaseMeetsItsGuarantee) {
  for (std::size_t n = 12; n <= 90; n += 13)
    for (std::uint64_t seed = 0; seed < 60; ++seed)
      for (std::size_t q : {3u, 5u, 7u})
        for (std::size_t s : {2u, 3u}) {
          Graph g = random_sparse_connected(n, static_cast<long long>(seed % 4) - 1, seed * 7 + n);
          TrichotomyOutcome o = trichotomy(g, {q, s});
          if (auto* p = std::get_if<SuspendedPathCase>(&o)) {
            EXPECT_GE(p->path.size(), q);
            EXPECT_TRUE(is_path_in(g, p->path));
            for (std::size_t i = 1; i + 1 < p->path.size(); ++i) { EXPECT_EQ(g.degree(p->path[i]), 2u); }
          } else if (auto* m = std::get_if<EndEdgeMatchingCase>(&o)) {
            EXPECT_EQ(m->edges.size(), s);
            for (auto [sup, leaf] : m->edges) { EXPECT_EQ(g.degree(leaf), 1u); }
          } else {
            const auto& st = std::get<StarVertexCase>(o);
            EXPECT_LT(longest_suspended_path(g), q);
            EXPECT_LT(max_end_edge_matching(g).size(), s);
            EXPECT_GE(static_cast<long long>(st.leaves.size()), st.required) << write_graph6(g);
            for (VertexId l : st.leaves) { EXPECT_EQ(g.degree(l), 1u); }
          }
        }
}

TEST(Trichotomy, RejectsBadInput) {
  EXPECT_THROW(trichotomy(path_graph(4), {5, 2}), HypothesisError);
  EXPECT_THROW(trichotomy(matching_graph(3), {3, 2}), HypothesisError);
  EXPECT_THROW(trichotomy(path_graph(4), {2, 2}), HypothesisError);
}
