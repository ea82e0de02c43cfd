#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fangood/certificate.hpp"
#include "fangood/coloring.hpp"
#include "fangood/errors.hpp"
#include "fangood/graph.hpp"
#include "fangood/matching.hpp"
#include "fangood/subgraph.hpp"

namespace fangood {

inline constexpr std::uint64_t kSearchBudget = 4'000'000;

// ---- path extension -------------------------------------------------------

struct ExtendedPath {
  std::vector<VertexId> path;  // a+1 vertices, same ends as the input
};
struct BlueClique {
  std::vector<VertexId> vertices;  // c vertices
};
struct BlueDominated {
  std::vector<VertexId> vertices;  // d path vertices blue to all of Y
};
using PathExtensionOutcome = std::variant<ExtendedPath, BlueClique, BlueDominated>;

inline PathExtensionOutcome extend_path(const TwoColoring& col, std::span<const VertexId> path,
                                        std::span<const VertexId> ys, std::size_t c,
                                        std::size_t d) {
  const std::size_t a = path.size(), b = ys.size();
  if (a == 0) throw std::invalid_argument("path must be nonempty");
  if (c == 0) throw std::invalid_argument("c must be at least 1");
  if (a < b * (c - 1) + d)
    throw HypothesisError("path extension needs a >= b(c-1)+d, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                          " d=" + std::to_string(d));
  VertexSet on_path(col.order());
  for (std::size_t i = 0; i < a; ++i) {
    if (on_path.test(path[i])) throw std::invalid_argument("path repeats a vertex");
    on_path.set(path[i]);
    if (i + 1 < a && !col.is_red(path[i], path[i + 1]))
      throw std::invalid_argument("path is not red");
  }
  for (VertexId y : ys)
    if (on_path.test(y)) throw std::invalid_argument("Y meets the path");

  // Insertion between consecutive vertices.
  for (std::size_t i = 0; i + 1 < a; ++i)
    for (VertexId y : ys)
      if (col.is_red(y, path[i]) && col.is_red(y, path[i + 1])) {
        ExtendedPath e{{path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1}};
        e.path.push_back(y);
        e.path.insert(e.path.end(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
        return e;
      }
  // Rotation: y red to x_i and x_j with x_{i+1} x_{j+1} red.
  std::vector<std::vector<std::size_t>> reds(b);
  for (std::size_t yi = 0; yi < b; ++yi)
    for (std::size_t i = 0; i + 1 < a; ++i)
      if (col.is_red(ys[yi], path[i])) reds[yi].push_back(i);
  for (std::size_t yi = 0; yi < b; ++yi) {
    const auto& r = reds[yi];
    for (std::size_t p = 0; p < r.size(); ++p)
      for (std::size_t q = p + 1; q < r.size(); ++q) {
        const std::size_t i = r[p], j = r[q];
        if (!col.is_red(path[i + 1], path[j + 1])) continue;
        ExtendedPath e;
        for (std::size_t s = 0; s <= i; ++s) e.path.push_back(path[s]);
        e.path.push_back(ys[yi]);
        for (std::size_t s = j + 1; s-- > i + 1;) e.path.push_back(path[s]);
        for (std::size_t s = j + 1; s < a; ++s) e.path.push_back(path[s]);
        return e;
      }
  }
  // Successors of the red neighbours of y form a blue clique with y.
  for (std::size_t yi = 0; yi < b; ++yi)
    if (reds[yi].size() + 1 >= c) {
      BlueClique k{{ys[yi]}};
      for (std::size_t s = 0; k.vertices.size() < c; ++s) k.vertices.push_back(path[reds[yi][s] + 1]);
      return k;
    }
  BlueDominated dom;
  for (std::size_t i = 0; i < a && dom.vertices.size() < d; ++i) {
    bool all_blue = true;
    for (VertexId y : ys)
      if (!col.is_blue(y, path[i])) {
        all_blue = false;
        break;
      }
    if (all_blue) dom.vertices.push_back(path[i]);
  }
  if (dom.vertices.size() < d) throw EngineDefect("path extension produced no outcome");
  return dom;
}

// ---- Hall dichotomy -------------------------------------------------------

struct RedMatching {
  std::vector<Edge> pairs;  // (x, y), one per vertex of X in input order
};
struct BlueBiclique {
  std::vector<VertexId> xs;  // c+1 vertices of X
  std::vector<VertexId> ys;  // b-c vertices of Y
};
using HallOutcome = std::variant<RedMatching, BlueBiclique>;

inline HallOutcome hall_dichotomy(const TwoColoring& col, std::span<const VertexId> xs,
                                  std::span<const VertexId> ys) {
  const std::size_t a = xs.size(), b = ys.size();
  if (a > b) throw std::invalid_argument("hall_dichotomy needs |X| <= |Y|");
  VertexSet in_x(col.order());
  for (VertexId x : xs) in_x.set(x);
  for (VertexId y : ys)
    if (in_x.test(y)) throw std::invalid_argument("X and Y overlap");
  std::vector<std::vector<std::size_t>> adj(a);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (col.is_red(xs[i], ys[j])) adj[i].push_back(j);
  BipartiteMatching m = kuhn_matching(adj, b);
  if (m.size == a) {
    RedMatching out;
    for (std::size_t i = 0; i < a; ++i) out.pairs.emplace_back(xs[i], ys[m.x_to_y[i]]);
    return out;
  }
  // Alternating reachability from the unmatched X vertices.
  std::vector<char> rx(a, 0), ry(b, 0);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < a; ++i)
    if (m.x_to_y[i] == SIZE_MAX) {
      rx[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : adj[i]) {
      if (ry[j]) continue;
      ry[j] = 1;
      std::size_t i2 = m.y_to_x[j];
      if (i2 != SIZE_MAX && !rx[i2]) {
        rx[i2] = 1;
        stack.push_back(i2);
      }
    }
  }
  BlueBiclique out;
  std::size_t reached_y = 0;
  for (std::size_t j = 0; j < b; ++j) {
    if (ry[j]) ++reached_y;
    else out.ys.push_back(ys[j]);
  }
  for (std::size_t i = 0; i < a && out.xs.size() < reached_y + 1; ++i)
    if (rx[i]) out.xs.push_back(xs[i]);
  return out;
}

// ---- fans, stars, matchings ----------------------------------------------

inline std::optional<BlueFan> find_blue_fan_at(const TwoColoring& col, VertexId v, std::size_t k,
                                               const VertexSet& forbidden) {
  VertexSet u = col.blue_neighbors(v) - forbidden;
  if (u.count() < 2 * k) return std::nullopt;
  auto m = max_blue_matching_in(col, u, k);
  if (m.size() < k) return std::nullopt;
  return BlueFan{v, std::move(m)};
}

// Lowest-id center carrying a blue F_k outside `forbidden`.
inline std::optional<BlueFan> scan_blue_fan(const TwoColoring& col, std::size_t k,
                                            const VertexSet& forbidden) {
  for (VertexId v = 0; v < col.order(); ++v) {
    if (forbidden.test(v)) continue;
    if (auto f = find_blue_fan_at(col, v, k, forbidden)) return f;
  }
  return std::nullopt;
}

inline std::optional<BlueFan> scan_blue_fan(const TwoColoring& col, std::size_t k) {
  return scan_blue_fan(col, k, VertexSet(col.order()));
}

struct Star {
  VertexId center = kNoVertex;
  std::vector<VertexId> leaves;
};

// Lowest-id vertex of `within` with at least n-1 red neighbours in `within`.
inline std::optional<Star> find_red_star(const TwoColoring& col, std::size_t n,
                                         const VertexSet& within) {
  if (n == 0) throw std::invalid_argument("star order must be at least 1");
  for (VertexId v = within.first(); v != kNoVertex; v = within.after(v)) {
    VertexSet r = col.red_neighbors_in(v, within);
    if (r.count() + 1 >= n) return Star{v, r.first_n(n - 1)};
  }
  return std::nullopt;
}

inline std::optional<Star> find_red_star(const TwoColoring& col, std::size_t n) {
  return find_red_star(col, n, VertexSet::full(col.order()));
}

// Blue K_{1,k} inside U, lowest-id center.
inline std::optional<Star> find_blue_star(const TwoColoring& col, const VertexSet& u,
                                          std::size_t k) {
  for (VertexId v = u.first(); v != kNoVertex; v = u.after(v)) {
    VertexSet b = col.blue_neighbors_in(v, u);
    if (b.count() >= k) return Star{v, b.first_n(k)};
  }
  return std::nullopt;
}

namespace detail {

// Leaves for fixed centers: each center needs k distinct blue leaves in pool.
inline std::optional<std::vector<Star>> assign_star_leaves(const TwoColoring& col,
                                                           std::span<const VertexId> centers,
                                                           const VertexSet& pool, std::size_t k) {
  auto leaves = pool.to_vector();
  std::vector<std::vector<std::size_t>> adj;
  for (VertexId ctr : centers) {
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < leaves.size(); ++j)
      if (col.is_blue(ctr, leaves[j])) row.push_back(j);
    for (std::size_t r = 0; r < k; ++r) adj.push_back(row);
  }
  auto m = kuhn_matching(adj, leaves.size());
  if (m.size < adj.size()) return std::nullopt;
  std::vector<Star> out;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    Star s{centers[i], {}};
    for (std::size_t r = 0; r < k; ++r) s.leaves.push_back(leaves[m.x_to_y[i * k + r]]);
    std::sort(s.leaves.begin(), s.leaves.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

// t vertex-disjoint blue K_{1,k} inside U. Greedy first; then a search over
// center sets pruned by Hall's condition. Budget counts center sets tried.
inline std::optional<std::vector<Star>> find_blue_stars(const TwoColoring& col, const VertexSet& u,
                                                        std::size_t k, std::size_t t,
                                                        std::uint64_t budget = 200'000) {
  {
    VertexSet rest = u;
    std::vector<Star> out;
    while (out.size() < t) {
      auto s = find_blue_star(col, rest, k);
      if (!s) break;
      rest.reset(s->center);
      for (VertexId l : s->leaves) rest.reset(l);
      out.push_back(std::move(*s));
    }
    if (out.size() == t) return out;
  }
  std::vector<VertexId> cands;
  u.for_each([&](VertexId v) {
    if (col.blue_degree_in(v, u) >= k) cands.push_back(v);
  });
  if (cands.size() < t) return std::nullopt;
  std::vector<VertexId> chosen;
  std::uint64_t tried = 0;
  std::optional<std::vector<Star>> found;
  auto hall_ok = [&]() {
    VertexSet pool = u;
    for (VertexId ctr : chosen) pool.reset(ctr);
    const std::size_t m = chosen.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      VertexSet uni(col.order());
      std::size_t cnt = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) {
          uni |= col.blue_neighbors_in(chosen[i], pool);
          ++cnt;
        }
      if (uni.count() < cnt * k) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
    if (chosen.size() == t) {
      VertexSet pool = u;
      for (VertexId ctr : chosen) pool.reset(ctr);
      found = detail::assign_star_leaves(col, chosen, pool, k);
      return found.has_value();
    }
    for (std::size_t i = from; i + (t - chosen.size()) <= cands.size(); ++i) {
      if (++tried > budget) return false;
      chosen.push_back(cands[i]);
      if (hall_ok() && dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(0);
  return found;
}

// ---- red G or blue kK_2 --------------------------------------------------

struct BlueMatching {
  std::vector<Edge> pairs;
};
using Fragment = std::variant<RedEmbedding, BlueMatching>;

inline Fragment red_G_or_blue_kK2(const TwoColoring& col, const VertexSet& u, const Graph& g,
                                  std::size_t k, std::uint64_t budget = kSearchBudget) {
  if (u.count() < g.order() + k - 1)
    throw HypothesisError("vertex set of size " + std::to_string(u.count()) +
                          " is below n+k-1 = " + std::to_string(g.order() + k - 1));
  auto m = max_blue_matching_in(col, u, k);
  if (m.size() >= k) return BlueMatching{std::move(m)};
  auto r = embed_red(col, g, u, {}, budget);
  if (r.status == SearchStatus::Found) return RedEmbedding{std::move(r.image)};
  throw EngineDefect(std::string("neither red G nor blue kK_2 in a set of size ") +
                     std::to_string(u.count()) +
                     (r.status == SearchStatus::BudgetExceeded ? " (search budget exhausted)" : ""));
}

// ---- fan assembly ---------------------------------------------------------

// t fans out of a blue clique on at least t(2k+1) vertices.
inline BlueFans fans_from_clique(std::span<const VertexId> clique, std::size_t k, std::size_t t) {
  BlueFans out;
  for (std::size_t f = 0; f < t; ++f) {
    const std::size_t base = f * (2 * k + 1);
    BlueFan fan{clique[base], {}};
    for (std::size_t j = 0; j < k; ++j)
      fan.pairs.emplace_back(clique[base + 1 + 2 * j], clique[base + 2 + 2 * j]);
    out.fans.push_back(std::move(fan));
  }
  return out;
}

// Blue stars plus kt further vertices blue to every star vertex.
inline BlueFans fans_from_stars(std::span<const Star> stars, std::span<const VertexId> extra,
                                std::size_t k) {
  BlueFans out;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    BlueFan fan{stars[i].center, {}};
    for (std::size_t j = 0; j < k; ++j) fan.pairs.emplace_back(extra[i * k + j], stars[i].leaves[j]);
    out.fans.push_back(std::move(fan));
  }
  return out;
}

// Centers blue to both ends of every pair; pairs are blue.
inline BlueFans fans_from_matching(std::span<const VertexId> centers, std::span<const Edge> pairs,
                                   std::size_t k) {
  BlueFans out;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    BlueFan fan{centers[i], {}};
    for (std::size_t j = 0; j < k; ++j) fan.pairs.push_back(pairs[i * k + j]);
    out.fans.push_back(std::move(fan));
  }
  return out;
}

// ---- recursive min-degree embedding ---------------------------------------

// Reverse of a min-degree elimination order (smallest id on ties).
inline std::vector<VertexId> min_degree_build_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<VertexId> elim;
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = kNoVertex;
    for (VertexId v = 0; v < n; ++v)
      if (!gone[v] && (best == kNoVertex || deg[v] < deg[best])) best = v;
    gone[best] = true;
    elim.push_back(best);
    for (VertexId w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  std::reverse(elim.begin(), elim.end());
  return elim;
}

using EmbedOrFan = std::variant<RedEmbedding, BlueFan>;

// Adds vertices in min-degree build order, each at the lowest-id host vertex
// red to its placed neighbours. When stuck, the placed neighbour with the
// largest blue neighbourhood among unused vertices either carries a blue fan
// or that neighbourhood holds a fresh red copy of the current prefix.
inline EmbedOrFan min_degree_embed(const TwoColoring& col, const Graph& g, std::size_t k,
                                   const VertexSet& host) {
  const std::size_t n = g.order();
  if (host.count() < n) throw EngineDefect("host smaller than the pattern");
  auto order = min_degree_build_order(g);
  std::vector<VertexId> img(n, kNoVertex);
  VertexSet used(col.order());
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId u = order[i];
    VertexSet cand = host - used;
    std::vector<VertexId> anchors;
    for (VertexId w : g.neighbors(u))
      if (img[w] != kNoVertex) {
        anchors.push_back(img[w]);
        cand &= col.red_neighbors(img[w]);
      }
    if (VertexId x = cand.first(); x != kNoVertex) {
      img[u] = x;
      used.set(x);
      continue;
    }
    const VertexSet free = host - used;
    VertexId w = kNoVertex;
    std::size_t best = 0;
    for (VertexId a : anchors) {
      const std::size_t d = col.blue_degree_in(a, free);
      if (w == kNoVertex || d > best) {
        w = a;
        best = d;
      }
    }
    std::vector<VertexId> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    Graph gi = g.induced(prefix);
    VertexSet pool = col.blue_neighbors_in(w, free);
    if (pool.count() < gi.order() + k - 1)
      throw EngineDefect("min-degree embedding: blue neighbourhood too small (" +
                         std::to_string(pool.count()) + ")");
    Fragment f = red_G_or_blue_kK2(col, pool, gi, k);
    if (auto* bm = std::get_if<BlueMatching>(&f)) return BlueFan{w, bm->pairs};
    const auto& re = std::get<RedEmbedding>(f);
    used.clear();
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      img[prefix[j]] = re.image[j];
      used.set(re.image[j]);
    }
  }
  return RedEmbedding{std::move(img)};
}

}  // namespace fangood
