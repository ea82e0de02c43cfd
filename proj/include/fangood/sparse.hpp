#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "fangood/errors.hpp"
#include "fangood/graph.hpp"

namespace fangood {

struct SparseProfile {
  std::size_t n = 0;
  std::size_t m = 0;
  long long ell = 0;  // m - n

  static SparseProfile of(const Graph& g) {
    return {g.order(), g.size(),
            static_cast<long long>(g.size()) - static_cast<long long>(g.order())};
  }
};

struct PeelResult {
  Graph core;                          // induced on core_vertices, relabelled
  std::vector<VertexId> core_vertices;  // ascending original ids
  std::vector<VertexId> removal_order;
  std::vector<VertexId> parent;  // per removal step: remaining neighbour, or kNoVertex
};

// Repeatedly delete a vertex of degree at most 1, smallest id first.
inline PeelResult peel_degree_one(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) ready.push(v);
  }
  PeelResult r;
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    if (gone[v]) continue;
    gone[v] = true;
    VertexId par = kNoVertex;
    for (VertexId w : g.neighbors(v)) {
      if (gone[w]) continue;
      par = w;
      if (--deg[w] <= 1) ready.push(w);
    }
    r.removal_order.push_back(v);
    r.parent.push_back(par);
  }
  for (VertexId v = 0; v < n; ++v)
    if (!gone[v]) r.core_vertices.push_back(v);
  r.core = g.induced(r.core_vertices);
  return r;
}

// A maximal run of degree-2 vertices with its two ends. Open chains are
// [v0, u1, ..., ur, v_{r+1}] with v0 < v_{r+1}; closed chains are
// [w, u1, ..., ur] with the edge ur-w implied. The order of the longest
// suspended path inside is vertices.size() either way.
struct SuspendedChain {
  std::vector<VertexId> vertices;
  bool closed = false;

  std::size_t order() const { return vertices.size(); }
  std::size_t interior() const { return closed ? vertices.size() - 1 : vertices.size() - 2; }
};

inline std::vector<SuspendedChain> suspended_chains(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<SuspendedChain> out;
  std::vector<bool> seen(n, false);
  for (VertexId w = 0; w < n; ++w) {
    if (g.degree(w) == 2) continue;
    for (VertexId x : g.neighbors(w)) {
      if (g.degree(x) != 2 || seen[x]) continue;
      std::vector<VertexId> chain{w};
      VertexId prev = w, cur = x;
      while (g.degree(cur) == 2 && cur != w) {
        chain.push_back(cur);
        seen[cur] = true;
        const auto& nb = g.neighbors(cur);
        VertexId nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
      }
      SuspendedChain c;
      if (cur == w) {
        c.closed = true;
        if (chain.size() >= 3 && chain.back() < chain[1]) std::reverse(chain.begin() + 1, chain.end());
      } else {
        chain.push_back(cur);
        if (chain.back() < chain.front()) std::reverse(chain.begin(), chain.end());
      }
      c.vertices = std::move(chain);
      out.push_back(std::move(c));
    }
  }
  // Components that are bare cycles.
  for (VertexId w = 0; w < n; ++w) {
    if (seen[w] || g.degree(w) != 2) continue;
    const auto& nb = g.neighbors(w);
    std::vector<VertexId> chain{w};
    seen[w] = true;
    VertexId prev = w, cur = std::min(nb[0], nb[1]);
    while (cur != w) {
      chain.push_back(cur);
      seen[cur] = true;
      const auto& cn = g.neighbors(cur);
      VertexId nxt = cn[0] == prev ? cn[1] : cn[0];
      prev = cur;
      cur = nxt;
    }
    out.push_back({std::move(chain), true});
  }
  return out;
}

inline std::optional<std::vector<VertexId>> find_suspended_path(const Graph& g, std::size_t q) {
  for (auto& c : suspended_chains(g))
    if (c.order() >= q) return c.vertices;
  return std::nullopt;
}

inline std::size_t longest_suspended_path(const Graph& g) {
  std::size_t best = g.size() ? 2 : (g.order() ? 1 : 0);
  for (auto& c : suspended_chains(g)) best = std::max(best, c.order());
  return best;
}

struct Shortening {
  SuspendedChain chain;  // original ids, before shortening
  std::size_t removed = 0;  // chain.vertices[1..removed] were dropped
};

struct ShortenResult {
  Graph graph;
  std::vector<VertexId> kept;  // new id -> original id
  std::vector<Shortening> log;
};

// Drop the first `removed` interior vertices of each chain (those next to
// vertices[0]) and join vertices[0] to the next survivor.
inline ShortenResult apply_shortenings(const Graph& g, std::vector<Shortening> log) {
  const std::size_t n = g.order();
  std::vector<bool> drop(n, false);
  std::vector<Edge> extra;
  for (auto& s : log) {
    if (s.removed == 0) continue;
    if (s.removed + 1 > s.chain.interior() || s.chain.order() - s.removed < 3)
      throw std::invalid_argument("shortening would leave fewer than 3 vertices");
    for (std::size_t i = 1; i <= s.removed; ++i) drop[s.chain.vertices[i]] = true;
    extra.push_back(canonical_edge(s.chain.vertices[0], s.chain.vertices[s.removed + 1]));
  }
  ShortenResult r;
  std::vector<VertexId> pos(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v)
    if (!drop[v]) {
      pos[v] = static_cast<VertexId>(r.kept.size());
      r.kept.push_back(v);
    }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (!drop[u] && !drop[v]) es.push_back(canonical_edge(pos[u], pos[v]));
  for (auto [u, v] : extra) es.push_back(canonical_edge(pos[u], pos[v]));
  r.graph = Graph(r.kept.size(), es);
  std::erase_if(log, [](const Shortening& s) { return s.removed == 0; });
  r.log = std::move(log);
  return r;
}

inline ShortenResult shorten_chain(const Graph& g, const SuspendedChain& c, std::size_t amount) {
  return apply_shortenings(g, {Shortening{c, amount}});
}

inline ShortenResult shorten_suspended_paths(const Graph& g, std::size_t cap) {
  if (cap < 3) throw std::invalid_argument("cap must be at least 3");
  std::vector<Shortening> log;
  for (auto& c : suspended_chains(g))
    if (c.order() > cap) log.push_back({c, c.order() - cap});
  return apply_shortenings(g, std::move(log));
}

// End-edges as (support, leaf), greedily by ascending leaf id. Every
// end-edge has a leaf, so edges conflict only through a shared support and
// the greedy result is a maximum end-edge matching.
inline std::vector<Edge> max_end_edge_matching(const Graph& g) {
  std::vector<Edge> out;
  std::vector<bool> used(g.order(), false);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1 || used[v]) continue;
    VertexId s = g.neighbors(v)[0];
    if (used[s]) continue;
    used[v] = used[s] = true;
    out.emplace_back(s, v);
  }
  return out;
}

inline std::optional<std::vector<Edge>> find_end_edge_matching(const Graph& g, std::size_t s) {
  if (s == 0) throw std::invalid_argument("matching size must be at least 1");
  auto all = max_end_edge_matching(g);
  if (all.size() < s) return std::nullopt;
  all.resize(s);
  return all;
}

inline std::size_t count_degree_one(const Graph& g) {
  std::size_t c = 0;
  for (VertexId v = 0; v < g.order(); ++v) c += g.degree(v) == 1;
  return c;
}

inline long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// ceil(n/(2q) - 3*ell/2) clamped at 0.
inline long long degree_one_bound(std::size_t n, long long ell, std::size_t q) {
  const long long num = static_cast<long long>(n) - 3 * ell * static_cast<long long>(q);
  return std::max(0LL, ceil_div(num, 2 * static_cast<long long>(q)));
}

inline long long degree_one_lower_bound(const Graph& g, std::size_t q) {
  if (has_isolated_vertex(g)) throw HypothesisError("graph has an isolated vertex");
  if (longest_suspended_path(g) > q)
    throw HypothesisError("graph has a suspended path with more than q vertices");
  return degree_one_bound(g.order(), SparseProfile::of(g).ell, q);
}

struct TrichotomyParams {
  std::size_t q = 3;
  std::size_t s = 2;

  long long gamma(long long ell) const {
    return (static_cast<long long>(q) - 2) * (2 * static_cast<long long>(s) + 3 * ell - 2) + 1;
  }
};

struct SuspendedPathCase {
  std::vector<VertexId> path;
};
struct EndEdgeMatchingCase {
  std::vector<Edge> edges;  // (support, leaf)
};
struct StarVertexCase {
  VertexId center = kNoVertex;
  std::vector<VertexId> leaves;
  long long gamma = 0;
  long long required = 0;  // ceil((n - gamma)/(s - 1))
};
using TrichotomyOutcome = std::variant<SuspendedPathCase, EndEdgeMatchingCase, StarVertexCase>;

// Vertex with the most degree-1 neighbours (smallest id on ties).
inline StarVertexCase richest_leaf_vertex(const Graph& g) {
  StarVertexCase best;
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<VertexId> leaves;
    for (VertexId w : g.neighbors(v))
      if (g.degree(w) == 1) leaves.push_back(w);
    if (best.center == kNoVertex || leaves.size() > best.leaves.size()) {
      best.center = v;
      best.leaves = std::move(leaves);
    }
  }
  return best;
}

inline TrichotomyOutcome trichotomy(const Graph& g, TrichotomyParams p) {
  const std::size_t n = g.order();
  if (p.q < 3) throw HypothesisError("q must be at least 3");
  if (p.s < 2) throw HypothesisError("s must be at least 2");
  if (n < p.q) throw HypothesisError("order " + std::to_string(n) + " below q = " + std::to_string(p.q));
  if (!is_connected(g)) throw HypothesisError("graph is not connected");
  if (auto path = find_suspended_path(g, p.q)) return SuspendedPathCase{std::move(*path)};
  if (auto es = find_end_edge_matching(g, p.s)) return EndEdgeMatchingCase{std::move(*es)};
  StarVertexCase star = richest_leaf_vertex(g);
  star.gamma = p.gamma(SparseProfile::of(g).ell);
  star.required = ceil_div(static_cast<long long>(n) - star.gamma, static_cast<long long>(p.s) - 1);
  return star;
}

}  // namespace fangood
