#include <gtest/gtest.h>

#include <functional>

#include "fangood/certificate.hpp"
#include "fangood/lemmas.hpp"
#include "support/brute.hpp"
#include "support/validate.hpp"

using namespace fangood;

namespace {

// All colorings of K_{a+b} with 0..a-1 a red path, every other pair free.
template <class F>
void for_each_path_coloring(std::size_t a, std::size_t b, F&& f) {
  const std::size_t n = a + b;
  std::vector<Edge> free;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!(v == u + 1 && v < a)) free.emplace_back(u, v);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free.size()); ++code) {
    TwoColoring c(n);
    for (VertexId v = 1; v < a; ++v) c.set_red(v - 1, v);
    for (std::size_t i = 0; i < free.size(); ++i)
      if (code >> i & 1) c.set_red(free[i].first, free[i].second);
    f(c);
  }
}

std::vector<VertexId> iota_ids(VertexId from, VertexId to) {
  std::vector<VertexId> v;
  for (VertexId i = from; i < to; ++i) v.push_back(i);
  return v;
}

bool brute_blue_stars(const TwoColoring& c, const VertexSet& u, std::size_t k, std::size_t t) {
  const auto blue = brute::blue_matrix(c);
  std::vector<char> used(c.order(), 0);
  std::function<bool(std::size_t)> go;
  std::function<bool(VertexId, std::size_t, VertexId, std::size_t)> leaves =
      [&](VertexId ctr, std::size_t left, VertexId from, std::size_t stars_left) {
        if (left == 0) return go(stars_left - 1);
        for (VertexId x = from; x < c.order(); ++x) {
          if (!u.test(x) || used[x] || !blue[ctr][x]) continue;
          used[x] = 1;
          if (leaves(ctr, left - 1, x + 1, stars_left)) return true;
          used[x] = 0;
        }
        return false;
      };
  go = [&](std::size_t stars_left) {
    if (stars_left == 0) return true;
    for (VertexId v = 0; v < c.order(); ++v) {
      if (!u.test(v) || used[v]) continue;
      used[v] = 1;
      if (leaves(v, k, 0, stars_left)) return true;
      used[v] = 0;
    }
    return false;
  };
  return go(t);
}

}  // namespace

TEST(ExtendPath, ExhaustiveUpToSixVertices) {
  std::size_t cases = 0;
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 0; a + b <= 6; ++b) {
      const auto path = iota_ids(0, static_cast<VertexId>(a));
      const auto ys = iota_ids(static_cast<VertexId>(a), static_cast<VertexId>(a + b));
      for_each_path_coloring(a, b, [&](const TwoColoring& c) {
        for (std::size_t cc = 1; b * (cc - 1) <= a && cc <= a + 1; ++cc)
          for (std::size_t d = 0; b * (cc - 1) + d <= a; ++d) {
            auto o = extend_path(c, path, ys, cc, d);
            ASSERT_TRUE(check::path_outcome(c, path, ys, cc, d, o))
                << "a=" << a << " b=" << b << " c=" << cc << " d=" << d;
            ++cases;
          }
      });
    }
  EXPECT_GT(cases, 100000u);
}

TEST(ExtendPath, FullyRedInsertsAfterFirstPair) {
  TwoColoring c = TwoColoring::all_red(5);
  std::vector<VertexId> path{0, 1, 2, 3}, ys{4};
  auto o = extend_path(c, path, ys, 2, 2);
  ASSERT_TRUE(std::holds_alternative<ExtendedPath>(o));
  EXPECT_EQ(std::get<ExtendedPath>(o).path, (std::vector<VertexId>{0, 4, 1, 2, 3}));
}

TEST(ExtendPath, BlueSideGivesCliqueOrDomination) {
  TwoColoring c(6);
  for (VertexId v = 1; v < 4; ++v) c.set_red(v - 1, v);
  std::vector<VertexId> path{0, 1, 2, 3}, ys{4, 5};
  auto o = extend_path(c, path, ys, 2, 2);
  EXPECT_FALSE(std::holds_alternative<ExtendedPath>(o));
  EXPECT_TRUE(check::path_outcome(c, path, ys, 2, 2, o));
}

TEST(ExtendPath, RejectsBadInput) {
  TwoColoring c = TwoColoring::all_red(6);
  std::vector<VertexId> path{0, 1, 2}, ys{3, 4};
  EXPECT_THROW(extend_path(c, path, ys, 3, 0), HypothesisError);  // 3 < 2*2
  std::vector<VertexId> overlap{2, 4};
  EXPECT_THROW(extend_path(c, path, overlap, 1, 0), std::invalid_argument);
  TwoColoring blue(6);
  EXPECT_THROW(extend_path(blue, path, ys, 1, 0), std::invalid_argument);
}

TEST(Hall, ExhaustiveUpToSixVertices) {
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = a; a + b <= 6; ++b) {
      const auto xs = iota_ids(0, static_cast<VertexId>(a));
      const auto ys = iota_ids(static_cast<VertexId>(a), static_cast<VertexId>(a + b));
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (a * b)); ++code) {
        TwoColoring c(a + b);
        for (std::size_t i = 0; i < a; ++i)
          for (std::size_t j = 0; j < b; ++j)
            if (code >> (i * b + j) & 1) c.set_red(xs[i], ys[j]);
        ASSERT_TRUE(check::hall_outcome(c, xs, ys, hall_dichotomy(c, xs, ys))) << code;
      }
    }
}

TEST(Hall, Examples) {
  TwoColoring red = TwoColoring::all_red(8);
  std::vector<VertexId> xs{0, 1, 2}, ys{3, 4, 5, 6, 7};
  EXPECT_TRUE(std::holds_alternative<RedMatching>(hall_dichotomy(red, xs, ys)));
  TwoColoring blue(6);
  std::vector<VertexId> x2{0, 1}, y4{2, 3, 4, 5};
  auto o = hall_dichotomy(blue, x2, y4);
  ASSERT_TRUE(std::holds_alternative<BlueBiclique>(o));
  EXPECT_TRUE(check::hall_outcome(blue, x2, y4, o));
  EXPECT_THROW(hall_dichotomy(blue, y4, x2), std::invalid_argument);
}

TEST(Fans, ScanAgreesWithBruteForceOnK12) {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    TwoColoring c = random_coloring(12, rng, 0.45 + 0.5 * uniform_unit(rng));
    const auto blue = brute::blue_matrix(c);
    for (std::size_t k : {1u, 2u, 3u}) {
      auto f = scan_blue_fan(c, k);
      ASSERT_EQ(f.has_value(), brute::has_tfan(blue, k, 1));
      if (f) { EXPECT_TRUE(verify_certificate(c, Graph(1), k, 1, BlueFans{{*f}}).ok); }
    }
  }
}

TEST(Fans, FindAtRespectsForbidden) {
  TwoColoring c(7);
  auto f = find_blue_fan_at(c, 0, 3, VertexSet(7));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->pairs.size(), 3u);
  EXPECT_FALSE(find_blue_fan_at(c, 0, 3, VertexSet::of(7, {6})));
  EXPECT_FALSE(find_blue_fan_at(TwoColoring::all_red(7), 0, 1, VertexSet(7)));
}

TEST(Stars, RedStarMatchesDegreeScan) {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    TwoColoring c = random_coloring(15, rng, uniform_unit(rng));
    for (std::size_t n = 1; n <= 15; n += 2) {
      auto s = find_red_star(c, n);
      std::size_t maxdeg = 0;
      for (VertexId v = 0; v < 15; ++v) maxdeg = std::max(maxdeg, c.red_degree(v));
      ASSERT_EQ(s.has_value(), maxdeg + 1 >= n);
      if (s) {
        EXPECT_EQ(s->leaves.size(), n - 1);
        for (VertexId l : s->leaves) { EXPECT_TRUE(c.is_red(s->center, l)); }
      }
    }
  }
}

TEST(Stars, DisjointBlueStarsAgreeWithBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    TwoColoring c = random_coloring(9, rng, 0.4 + 0.5 * uniform_unit(rng));
    const VertexSet u = VertexSet::full(9);
    for (std::size_t k : {1u, 2u})
      for (std::size_t t : {1u, 2u, 3u}) {
        auto got = find_blue_stars(c, u, k, t);
        ASSERT_EQ(got.has_value(), brute_blue_stars(c, u, k, t)) << k << " " << t;
        if (!got) continue;
        std::vector<char> used(9, 0);
        for (const auto& s : *got) {
          EXPECT_FALSE(used[s.center]);
          used[s.center] = 1;
          ASSERT_EQ(s.leaves.size(), k);
          for (VertexId l : s.leaves) {
            EXPECT_FALSE(used[l]);
            used[l] = 1;
            EXPECT_TRUE(c.is_blue(s.center, l));
          }
        }
      }
  }
}

TEST(RedGOrBlueMatching, TotalOnSmallNonCompleteGraphs) {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : brute::all_graphs(n))
      for (std::size_t k = 1; k <= 2; ++k) {
        if (k >= 2 && n >= 2 && is_complete(g)) continue;
        const std::size_t size = n + k - 1;
        const VertexSet u = VertexSet::full(size);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (size * (size - 1) / 2)); ++code) {
          TwoColoring c = brute::from_code(size, code);
          ASSERT_TRUE(check::fragment(c, u, g, k, red_G_or_blue_kK2(c, u, g, k)));
          ++cases;
        }
      }
  EXPECT_GT(cases, 10000u);
}

TEST(RedGOrBlueMatching, CompleteGraphsFallOutsideTheGuarantee) {
  // Blue triangle plus a red star: no red K_3 and no blue 2K_2 on four vertices.
  TwoColoring c(4);
  for (VertexId v = 0; v < 3; ++v) c.set_red(v, 3);
  EXPECT_THROW(red_G_or_blue_kK2(c, VertexSet::full(4), complete_graph(3), 2), EngineDefect);
  EXPECT_THROW(red_G_or_blue_kK2(c, VertexSet::full(3), path_graph(3), 2), HypothesisError);
}

TEST(FanAssembly, BuildersProduceVerifiableFans) {
  TwoColoring c(12);
  std::vector<VertexId> clique = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_TRUE(verify_certificate(c, Graph(1), 2, 2, fans_from_clique(clique, 2, 2)).ok);
  std::vector<Star> stars{{0, {1, 2}}, {3, {4, 5}}};
  std::vector<VertexId> extra{6, 7, 8, 9};
  EXPECT_TRUE(verify_certificate(c, Graph(1), 2, 2, fans_from_stars(stars, extra, 2)).ok);
  std::vector<VertexId> centers{10, 11};
  std::vector<Edge> pairs{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  EXPECT_TRUE(verify_certificate(c, Graph(1), 2, 2, fans_from_matching(centers, pairs, 2)).ok);
}

TEST(MinDegreeEmbed, OutcomeAlwaysValidates) {
  Rng rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 4 + uniform_below(rng, 8), k = 1 + uniform_below(rng, 2);
    Graph g = random_sparse_connected(n, static_cast<long long>(uniform_below(rng, 4)) - 1, rng());
    // Host of order ceil(n + 2mk - 2m/n), the size the greedy argument needs.
    const std::size_t m = g.size();
    const std::size_t need = n + 2 * m * k - (2 * m) / n;
    const std::size_t N = need + 2;
    TwoColoring c = random_coloring(N, rng, 0.5 + 0.45 * uniform_unit(rng));
    const VertexSet host = VertexSet::range(N, 2, static_cast<VertexId>(N));
    EmbedOrFan r = min_degree_embed(c, g, k, host);
    if (auto* e = std::get_if<RedEmbedding>(&r)) {
      ASSERT_TRUE(verify_certificate(c, g, k, 1, *e).ok);
      for (VertexId x : e->image) { EXPECT_TRUE(host.test(x)); }
    } else {
      ASSERT_TRUE(verify_certificate(c, g, k, 1, BlueFans{{std::get<BlueFan>(r)}}).ok);
    }
  }
}

TEST(MinDegreeEmbed, BuildOrderIsAPermutation) {
  Graph g = random_sparse_connected(20, 2, 5);
  auto order = min_degree_build_order(g);
  std::sort(order.begin(), order.end());
  for (VertexId i = 0; i < 20; ++i) { EXPECT_EQ(order[i], i); }
}
