#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "fangood/coloring.hpp"
#include "fangood/graph.hpp"

namespace fangood {

enum class SearchStatus { Found, Absent, BudgetExceeded };

struct EmbedResult {
  SearchStatus status = SearchStatus::Absent;
  std::vector<VertexId> image;
  std::uint64_t nodes = 0;
};

// Backtracking search for a red copy of `pattern` with all images in `host`.
// `partial` (optional) fixes some images up front; kNoVertex leaves a vertex
// free. budget == 0 means unlimited.
class RedEmbedder {
 public:
  RedEmbedder(const TwoColoring& c, const Graph& pattern, const VertexSet& host)
      : c_(c), g_(pattern), host_(host) {}

  EmbedResult run(std::span<const VertexId> partial = {}, std::uint64_t budget = 0) {
    const std::size_t n = g_.order();
    budget_ = budget;
    nodes_ = 0;
    exhausted_ = false;
    img_.assign(n, kNoVertex);
    used_ = VertexSet(c_.order());
    mapped_nbrs_.assign(n, 0);
    EmbedResult r;
    if (n == 0) {
      r.status = SearchStatus::Found;
      return r;
    }
    if (host_.count() < n) return r;

    // Blue degree inside the host orders candidates.
    key_.assign(c_.order(), 0);
    host_.for_each([&](VertexId x) { key_[x] = c_.blue_degree_in(x, host_); });

    std::vector<std::size_t> red_in(c_.order(), 0);
    host_.for_each([&](VertexId x) { red_in[x] = c_.red_degree_in(x, host_); });
    dom_.assign(n, VertexSet());
    for (VertexId u = 0; u < n; ++u) {
      dom_[u] = host_;
      const std::size_t need = g_.degree(u);
      host_.for_each([&](VertexId x) {
        if (red_in[x] < need) dom_[u].reset(x);
      });
    }
    std::size_t remaining = n;
    for (VertexId u = 0; u < partial.size() && u < n; ++u) {
      VertexId x = partial[u];
      if (x == kNoVertex) continue;
      if (!host_.test(x) || used_.test(x)) return r;
      img_[u] = x;
      used_.set(x);
      --remaining;
    }
    for (VertexId u = 0; u < n; ++u) {
      if (img_[u] == kNoVertex) continue;
      for (VertexId w : g_.neighbors(u)) {
        if (img_[w] == kNoVertex) {
          dom_[w] &= c_.red_neighbors(img_[u]);
          ++mapped_nbrs_[w];
        } else if (!c_.is_red(img_[u], img_[w])) {
          return r;
        }
      }
    }
    const bool ok = search(remaining);
    r.nodes = nodes_;
    if (ok) {
      r.status = SearchStatus::Found;
      r.image = img_;
    } else {
      r.status = exhausted_ ? SearchStatus::BudgetExceeded : SearchStatus::Absent;
    }
    return r;
  }

 private:
  VertexId pick() const {
    VertexId best = kNoVertex;
    for (VertexId u = 0; u < g_.order(); ++u) {
      if (img_[u] != kNoVertex) continue;
      if (best == kNoVertex || mapped_nbrs_[u] > mapped_nbrs_[best] ||
          (mapped_nbrs_[u] == mapped_nbrs_[best] && g_.degree(u) > g_.degree(best)))
        best = u;
    }
    return best;
  }

  bool search(std::size_t remaining) {
    if (remaining == 0) return true;
    if (budget_ && ++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (!budget_) ++nodes_;
    const VertexId u = pick();
    std::vector<VertexId> cand = (dom_[u] - used_).to_vector();
    std::stable_sort(cand.begin(), cand.end(),
                     [&](VertexId a, VertexId b) { return key_[a] < key_[b]; });
    std::vector<std::pair<VertexId, VertexSet>> saved;
    for (VertexId x : cand) {
      img_[u] = x;
      used_.set(x);
      bool ok = true;
      saved.clear();
      for (VertexId w : g_.neighbors(u)) {
        if (img_[w] != kNoVertex) continue;
        saved.emplace_back(w, dom_[w]);
        dom_[w] &= c_.red_neighbors(x);
        ++mapped_nbrs_[w];
        if (!dom_[w].any_outside(used_)) {
          ok = false;
          break;
        }
      }
      if (ok && search(remaining - 1)) return true;
      for (auto& [w, d] : saved) {
        dom_[w] = std::move(d);
        --mapped_nbrs_[w];
      }
      used_.reset(x);
      img_[u] = kNoVertex;
      if (exhausted_) return false;
    }
    return false;
  }

  const TwoColoring& c_;
  const Graph& g_;
  VertexSet host_;
  std::uint64_t budget_ = 0, nodes_ = 0;
  bool exhausted_ = false;
  std::vector<VertexId> img_;
  VertexSet used_;
  std::vector<VertexSet> dom_;
  std::vector<std::size_t> mapped_nbrs_;
  std::vector<std::size_t> key_;
};

inline EmbedResult embed_red(const TwoColoring& c, const Graph& pattern, const VertexSet& host,
                             std::span<const VertexId> partial = {}, std::uint64_t budget = 0) {
  return RedEmbedder(c, pattern, host).run(partial, budget);
}

inline EmbedResult embed_red(const TwoColoring& c, const Graph& pattern,
                             std::uint64_t budget = 0) {
  return embed_red(c, pattern, VertexSet::full(c.order()), {}, budget);
}

}  // namespace fangood
