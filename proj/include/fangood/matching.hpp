#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <span>
#include <vector>

#include "fangood/coloring.hpp"
#include "fangood/vertex_set.hpp"

namespace fangood {

// Maximum matching in a general graph (Edmonds' blossom algorithm), stopping
// early once `limit` pairs are matched. Returns pairs (u, v) with u < v.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<VertexId>> adj)
      : adj_(std::move(adj)), n_(adj_.size()), match_(n_, kNoVertex) {}

  std::vector<Edge> run(std::size_t limit = SIZE_MAX) {
    std::size_t size = 0;
    // Greedy start.
    for (VertexId v = 0; v < n_ && size < limit; ++v) {
      if (match_[v] != kNoVertex) continue;
      for (VertexId w : adj_[v])
        if (match_[w] == kNoVertex) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
    }
    for (VertexId v = 0; v < n_ && size < limit; ++v) {
      if (match_[v] != kNoVertex) continue;
      VertexId end = find_path(v);
      if (end == kNoVertex) continue;
      ++size;
      while (end != kNoVertex) {
        VertexId pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    std::vector<Edge> out;
    for (VertexId v = 0; v < n_; ++v)
      if (match_[v] != kNoVertex && v < match_[v]) out.emplace_back(v, match_[v]);
    if (out.size() > limit) out.resize(limit);
    return out;
  }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNoVertex) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    used_.assign(n_, false);
    parent_.assign(n_, kNoVertex);
    base_.resize(n_);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<VertexId> q{root};
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (VertexId to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
          VertexId cur = lca(v, to);
          blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push_back(i);
              }
            }
        } else if (parent_[to] == kNoVertex) {
          parent_[to] = v;
          if (match_[to] == kNoVertex) return to;
          used_[match_[to]] = true;
          q.push_back(match_[to]);
        }
      }
    }
    return kNoVertex;
  }

  std::vector<std::vector<VertexId>> adj_;
  std::size_t n_;
  std::vector<VertexId> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

// Maximum matching of the blue graph induced on U, in original ids.
inline std::vector<Edge> max_blue_matching_in(const TwoColoring& c, const VertexSet& u,
                                              std::size_t limit = SIZE_MAX) {
  auto verts = u.to_vector();
  std::vector<VertexId> pos(c.order(), kNoVertex);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<VertexId>(i);
  std::vector<std::vector<VertexId>> adj(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    c.blue_neighbors_in(verts[i], u).for_each([&](VertexId w) { adj[i].push_back(pos[w]); });
  auto local = BlossomMatcher(std::move(adj)).run(limit);
  std::vector<Edge> out;
  for (auto [a, b] : local) out.push_back(canonical_edge(verts[a], verts[b]));
  std::sort(out.begin(), out.end());
  return out;
}

// Bipartite matching between X and Y (indices) with Kuhn's augmenting paths.
// adj[i] lists the Y-indices available to X-index i.
struct BipartiteMatching {
  std::vector<std::size_t> x_to_y;  // SIZE_MAX when unmatched
  std::vector<std::size_t> y_to_x;
  std::size_t size = 0;
};

inline BipartiteMatching kuhn_matching(const std::vector<std::vector<std::size_t>>& adj,
                                       std::size_t ny) {
  BipartiteMatching m{std::vector<std::size_t>(adj.size(), SIZE_MAX),
                      std::vector<std::size_t>(ny, SIZE_MAX), 0};
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t x) {
    for (std::size_t y : adj[x]) {
      if (visited[y]) continue;
      visited[y] = 1;
      if (m.y_to_x[y] == SIZE_MAX || augment(m.y_to_x[y])) {
        m.x_to_y[x] = y;
        m.y_to_x[y] = x;
        return true;
      }
    }
    return false;
  };
  for (std::size_t x = 0; x < adj.size(); ++x) {
    visited.assign(ny, 0);
    if (augment(x)) ++m.size;
  }
  return m;
}

}  // namespace fangood
