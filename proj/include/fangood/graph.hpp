#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fangood/rng.hpp"
#include "fangood/vertex_set.hpp"

namespace fangood {

using Edge = std::pair<VertexId, VertexId>;

inline Edge canonical_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Undirected simple graph on [0, n). Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)), nbrs_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
      if (adj_[u].test(v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
      adj_[u].set(v);
      adj_[v].set(u);
      ++m_;
    }
    for (std::size_t v = 0; v < n; ++v) nbrs_[v] = adj_[v].to_vector();
  }
  Graph(std::size_t n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges)) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(VertexId u, VertexId v) const { return adj_[u].test(v); }
  std::size_t degree(VertexId v) const { return nbrs_[v].size(); }
  const VertexSet& neighborhood(VertexId v) const { return adj_[v]; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return nbrs_[v]; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < order(); ++u)
      for (VertexId v : nbrs_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Induced subgraph; vertex i of the result is keep[i].
  Graph induced(std::span<const VertexId> keep) const {
    std::vector<VertexId> pos(order(), kNoVertex);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<VertexId>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (VertexId w : nbrs_[keep[i]])
        if (pos[w] != kNoVertex && pos[w] > i) es.emplace_back(static_cast<VertexId>(i), pos[w]);
    return Graph(keep.size(), es);
  }

  std::size_t min_degree() const {
    std::size_t d = order() ? order() : 0;
    for (const auto& nb : nbrs_) d = std::min(d, nb.size());
    return d;
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : nbrs_) d = std::max(d, nb.size());
    return d;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::vector<VertexId>> nbrs_;
  std::size_t m_ = 0;
};

// Component index per vertex, numbered by smallest member.
inline std::vector<std::size_t> component_ids(const Graph& g) {
  std::vector<std::size_t> comp(g.order(), SIZE_MAX);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (comp[s] != SIZE_MAX) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u))
        if (comp[w] == SIZE_MAX) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

inline bool has_isolated_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

inline bool is_complete(const Graph& g) {
  return g.size() * 2 == g.order() * (g.order() - (g.order() ? 1 : 0));
}

enum class Family { Fan, Star, Path, Cycle, Complete, Matching };

struct NamedGraph {
  Family family;
  std::size_t param;
};

inline Graph build_named(NamedGraph spec) {
  const std::size_t p = spec.param;
  if (p == 0) throw std::invalid_argument("family parameter must be at least 1");
  std::vector<Edge> es;
  auto id = [](std::size_t x) { return static_cast<VertexId>(x); };
  switch (spec.family) {
    case Family::Fan:
      for (std::size_t i = 1; i <= 2 * p; ++i) es.emplace_back(0, id(i));
      for (std::size_t j = 0; j < p; ++j) es.emplace_back(id(2 * j + 1), id(2 * j + 2));
      return Graph(2 * p + 1, es);
    case Family::Star:
      for (std::size_t i = 1; i < p; ++i) es.emplace_back(0, id(i));
      return Graph(p, es);
    case Family::Path:
      for (std::size_t i = 0; i + 1 < p; ++i) es.emplace_back(id(i), id(i + 1));
      return Graph(p, es);
    case Family::Cycle:
      if (p < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      for (std::size_t i = 0; i < p; ++i) es.emplace_back(id(i), id((i + 1) % p));
      return Graph(p, es);
    case Family::Complete:
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) es.emplace_back(id(i), id(j));
      return Graph(p, es);
    case Family::Matching:
      for (std::size_t j = 0; j < p; ++j) es.emplace_back(id(2 * j), id(2 * j + 1));
      return Graph(2 * p, es);
  }
  throw std::invalid_argument("unknown family");
}

inline Graph fan_graph(std::size_t k) { return build_named({Family::Fan, k}); }
inline Graph star_graph(std::size_t n) { return build_named({Family::Star, n}); }
inline Graph path_graph(std::size_t n) { return build_named({Family::Path, n}); }
inline Graph cycle_graph(std::size_t n) { return build_named({Family::Cycle, n}); }
inline Graph complete_graph(std::size_t n) { return build_named({Family::Complete, n}); }
inline Graph matching_graph(std::size_t k) { return build_named({Family::Matching, k}); }

// Uniform random labelled tree via a Pruefer sequence.
inline std::vector<Edge> random_tree_edges(std::size_t n, Rng& rng) {
  std::vector<Edge> es;
  if (n < 2) return es;
  if (n == 2) return {{0, 1}};
  std::vector<VertexId> seq(n - 2);
  for (auto& x : seq) x = static_cast<VertexId>(uniform_below(rng, n));
  std::vector<std::size_t> deg(n, 1);
  for (VertexId x : seq) ++deg[x];
  std::size_t ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId x : seq) {
    es.push_back(canonical_edge(static_cast<VertexId>(leaf), x));
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  std::size_t last = n - 1;
  es.push_back(canonical_edge(static_cast<VertexId>(leaf), static_cast<VertexId>(last)));
  return es;
}

// Connected graph with n vertices and n + extra edges: a random spanning tree
// plus extra + 1 distinct random non-edges.
inline Graph random_sparse_connected(std::size_t n, long long extra, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("order must be at least 1");
  if (extra < -1) throw std::invalid_argument("extra must be at least -1");
  const long long max_extra = static_cast<long long>(n * (n - 1) / 2) - static_cast<long long>(n);
  if (extra > max_extra) throw std::invalid_argument("too many edges for the order");
  Rng rng(seed);
  std::vector<Edge> es = random_tree_edges(n, rng);
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (auto [u, v] : es) {
    adj[u].set(v);
    adj[v].set(u);
  }
  std::size_t want = static_cast<std::size_t>(static_cast<long long>(n) + extra);
  const std::size_t pairs = n * (n - 1) / 2;
  if (want * 2 > pairs) {
    // Dense request: pick uniformly among the remaining non-edges.
    std::vector<Edge> rest;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!adj[u].test(v)) rest.emplace_back(u, v);
    shuffle(rest, rng);
    for (std::size_t i = 0; es.size() < want; ++i) es.push_back(rest[i]);
  } else {
    while (es.size() < want) {
      VertexId u = static_cast<VertexId>(uniform_below(rng, n));
      VertexId v = static_cast<VertexId>(uniform_below(rng, n));
      if (u == v || adj[u].test(v)) continue;
      adj[u].set(v);
      adj[v].set(u);
      es.push_back(canonical_edge(u, v));
    }
  }
  return Graph(n, es);
}

}  // namespace fangood
