#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fangood/graph.hpp"
#include "fangood/rng.hpp"
#include "fangood/vertex_set.hpp"

namespace fangood {

enum class EdgeColor : std::uint8_t { Blue = 0, Red = 1 };

// Red/blue coloring of the pairs of K_N. Only red neighbourhoods are stored.
class TwoColoring {
 public:
  TwoColoring() = default;
  explicit TwoColoring(std::size_t n) : red_(n, VertexSet(n)) {}

  static TwoColoring all_red(std::size_t n) {
    TwoColoring c(n);
    for (VertexId v = 0; v < n; ++v) {
      c.red_[v] = VertexSet::full(n);
      c.red_[v].reset(v);
    }
    return c;
  }
  static TwoColoring all_blue(std::size_t n) { return TwoColoring(n); }
  static TwoColoring from_red_graph(const Graph& g) {
    TwoColoring c(g.order());
    for (VertexId v = 0; v < g.order(); ++v) c.red_[v] = g.neighborhood(v);
    return c;
  }

  std::size_t order() const noexcept { return red_.size(); }

  bool is_red(VertexId u, VertexId v) const { return red_[u].test(v); }
  bool is_blue(VertexId u, VertexId v) const { return u != v && !red_[u].test(v); }
  EdgeColor color(VertexId u, VertexId v) const {
    return is_red(u, v) ? EdgeColor::Red : EdgeColor::Blue;
  }
  void set_color(VertexId u, VertexId v, EdgeColor c) {
    if (u == v) throw std::invalid_argument("no color on a loop");
    red_[u].assign(v, c == EdgeColor::Red);
    red_[v].assign(u, c == EdgeColor::Red);
  }
  void set_red(VertexId u, VertexId v) { set_color(u, v, EdgeColor::Red); }
  void set_blue(VertexId u, VertexId v) { set_color(u, v, EdgeColor::Blue); }

  const VertexSet& red_neighbors(VertexId v) const { return red_[v]; }
  VertexSet blue_neighbors(VertexId v) const {
    VertexSet s = red_[v].complement();
    s.reset(v);
    return s;
  }
  // N_B(v) ∩ within.
  VertexSet blue_neighbors_in(VertexId v, const VertexSet& within) const {
    VertexSet s = within - red_[v];
    s.reset(v);
    return s;
  }
  VertexSet red_neighbors_in(VertexId v, const VertexSet& within) const {
    return red_[v] & within;
  }

  std::size_t red_degree(VertexId v) const { return red_[v].count(); }
  std::size_t blue_degree(VertexId v) const { return order() - 1 - red_degree(v); }
  std::size_t red_degree_in(VertexId v, const VertexSet& within) const {
    return red_[v].intersection_count(within);
  }
  std::size_t blue_degree_in(VertexId v, const VertexSet& within) const {
    return within.count() - red_degree_in(v, within) - (within.test(v) ? 1 : 0);
  }

  Graph red_graph() const { return graph_of(true); }
  Graph blue_graph() const { return graph_of(false); }

  bool operator==(const TwoColoring&) const = default;

 private:
  Graph graph_of(bool red) const {
    std::vector<Edge> es;
    for (VertexId u = 0; u < order(); ++u)
      for (VertexId v = u + 1; v < order(); ++v)
        if (is_red(u, v) == red) es.emplace_back(u, v);
    return Graph(order(), es);
  }

  std::vector<VertexSet> red_;
};

struct FanSpec {
  std::size_t k = 1;
  std::size_t t = 1;

  FanSpec(std::size_t k_, std::size_t t_ = 1) : k(k_), t(t_) {
    if (k == 0 || t == 0) throw std::invalid_argument("fan parameters must be at least 1");
  }
  std::size_t order() const { return t * (2 * k + 1); }
};

// Induced sub-coloring; vertex i of `coloring` is `to_parent[i]`.
struct Restriction {
  TwoColoring coloring;
  std::vector<VertexId> to_parent;
};

inline Restriction restrict_to(const TwoColoring& c, std::span<const VertexId> keep) {
  Restriction r{TwoColoring(keep.size()), {keep.begin(), keep.end()}};
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (c.is_red(keep[i], keep[j]))
        r.coloring.set_red(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return r;
}

inline Restriction restrict_to(const TwoColoring& c, const VertexSet& keep) {
  auto vs = keep.to_vector();
  return restrict_to(c, std::span<const VertexId>(vs));
}

// Each pair red independently with probability p_red.
inline TwoColoring random_coloring(std::size_t n, Rng& rng, double p_red = 0.5) {
  TwoColoring c(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (p_red == 0.5 ? (rng() >> 63) != 0 : bernoulli(rng, p_red)) c.set_red(u, v);
  return c;
}

}  // namespace fangood
