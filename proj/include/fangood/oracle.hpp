#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "fangood/certificate.hpp"
#include "fangood/coloring.hpp"
#include "fangood/errors.hpp"
#include "fangood/graph.hpp"
#include "fangood/subgraph.hpp"

namespace fangood {

inline constexpr std::size_t kOracleDefaultCeiling = 8;
inline constexpr std::size_t kOracleHardCeiling = 11;

// ---- detection on a fixed coloring ----------------------------------------

inline std::optional<std::vector<VertexId>> find_red_subgraph(const TwoColoring& c, const Graph& g) {
  auto r = embed_red(c, g);
  if (r.status == SearchStatus::Found) return r.image;
  return std::nullopt;
}

// Exact search for t disjoint blue fans. Centers are tried by descending
// blue degree and the pairs of each fan are enumerated as matchings.
class BlueFanSearch {
 public:
  BlueFanSearch(const TwoColoring& c, std::size_t k, std::size_t t) : c_(c), k_(k), t_(t) {
    for (VertexId v = 0; v < c.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return c.blue_degree(a) > c.blue_degree(b);
    });
  }

  std::optional<BlueFans> run() {
    if (t_ == 0) return BlueFans{};
    used_ = VertexSet(c_.order());
    fans_.clear();
    if (place(0, 0)) return BlueFans{fans_};
    return std::nullopt;
  }

 private:
  bool place(std::size_t fan_idx, std::size_t from) {
    if (fan_idx == t_) return true;
    const std::size_t free = c_.order() - used_.count();
    if (free < (t_ - fan_idx) * (2 * k_ + 1)) return false;
    for (std::size_t i = from; i < order_.size(); ++i) {
      const VertexId ctr = order_[i];
      if (used_.test(ctr)) continue;
      VertexSet nb = c_.blue_neighbors(ctr) - used_;
      if (nb.count() < 2 * k_) continue;
      used_.set(ctr);
      fans_.push_back(BlueFan{ctr, {}});
      // Fans are unordered, so later centers come later in the order.
      if (pairs(fan_idx, i + 1, nb)) return true;
      fans_.pop_back();
      used_.reset(ctr);
    }
    return false;
  }

  // Choose the k pairs of the current fan inside nb.
  bool pairs(std::size_t fan_idx, std::size_t next_from, VertexSet nb) {
    // Index, not reference: deeper fans may reallocate fans_.
    if (fans_[fan_idx].pairs.size() == k_) return place(fan_idx + 1, next_from);
    nb -= used_;
    if (nb.count() < 2 * (k_ - fans_[fan_idx].pairs.size())) return false;
    // The lowest remaining vertex is either matched now or never.
    const VertexId a = nb.first();
    VertexSet rest = nb;
    rest.reset(a);
    VertexSet partners = c_.blue_neighbors(a) & rest;
    for (VertexId b = partners.first(); b != kNoVertex; b = partners.after(b)) {
      used_.set(a);
      used_.set(b);
      fans_[fan_idx].pairs.emplace_back(a, b);
      if (pairs(fan_idx, next_from, rest)) return true;
      fans_[fan_idx].pairs.pop_back();
      used_.reset(a);
      used_.reset(b);
    }
    return pairs(fan_idx, next_from, rest);
  }

  const TwoColoring& c_;
  std::size_t k_, t_;
  std::vector<VertexId> order_;
  VertexSet used_;
  std::vector<BlueFan> fans_;
};

inline std::optional<BlueFans> find_blue_tfans(const TwoColoring& c, std::size_t k, std::size_t t) {
  return BlueFanSearch(c, k, t).run();
}

// Vertex set sizes of the red components.
inline std::size_t largest_red_component(const TwoColoring& c) {
  std::size_t best = 0;
  VertexSet seen(c.order());
  for (VertexId s = 0; s < c.order(); ++s) {
    if (seen.test(s)) continue;
    std::vector<VertexId> stack{s};
    seen.set(s);
    std::size_t size = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++size;
      (c.red_neighbors(v) - seen).for_each([&](VertexId w) {
        seen.set(w);
        stack.push_back(w);
      });
    }
    best = std::max(best, size);
  }
  return best;
}

// ---- small-order machinery on 64-bit masks --------------------------------

using Mask = std::uint64_t;

// A coloring of K_m with m <= 11 as red adjacency masks.
struct SmallColoring {
  std::uint8_t m = 0;
  std::array<std::uint16_t, kOracleHardCeiling + 1> red{};

  bool is_red(unsigned u, unsigned v) const { return red[u] >> v & 1; }

  TwoColoring to_coloring() const {
    TwoColoring c(m);
    for (unsigned u = 0; u < m; ++u)
      for (unsigned v = u + 1; v < m; ++v)
        if (is_red(u, v)) c.set_red(u, v);
    return c;
  }
  static SmallColoring from(const TwoColoring& c) {
    SmallColoring s;
    s.m = static_cast<std::uint8_t>(c.order());
    for (unsigned u = 0; u < s.m; ++u)
      for (unsigned v = 0; v < s.m; ++v)
        if (u != v && c.is_red(u, v)) s.red[u] |= std::uint16_t(1u << v);
    return s;
  }
  Mask adj(unsigned v, bool red_side) const {
    const Mask all = (Mask{1} << m) - 1;
    return red_side ? red[v] : (all & ~Mask{red[v]} & ~(Mask{1} << v));
  }
  bool operator==(const SmallColoring& o) const {
    if (m != o.m) return false;
    for (unsigned v = 0; v < m; ++v)
      if (red[v] != o.red[v]) return false;
    return true;
  }
};

// Does the red (or blue) graph of a small coloring contain `pattern`?
class MaskSubgraph {
 public:
  explicit MaskSubgraph(const Graph& pattern) : p_(pattern.order()) {
    // Connected-first order: each next vertex has the most placed neighbours.
    const std::size_t n = pattern.order();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || links[v] > links[best] ||
            (links[v] == links[best] && pattern.degree(v) > pattern.degree(best)))
          best = v;
      }
      placed[best] = true;
      order_.push_back(static_cast<VertexId>(best));
      for (VertexId w : pattern.neighbors(best)) ++links[w];
    }
    pos_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) pos_[order_[i]] = i;
    back_.assign(n, {});
    deg_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      deg_[i] = pattern.degree(order_[i]);
      for (VertexId w : pattern.neighbors(order_[i]))
        if (pos_[w] < i) back_[i].push_back(pos_[w]);
    }
  }

  bool contained_in(const SmallColoring& c, bool red_side) const {
    if (p_ == 0) return true;
    if (p_ > c.m) return false;
    std::array<Mask, 64> adj{};
    Mask ok_deg[64];
    for (unsigned v = 0; v < c.m; ++v) adj[v] = c.adj(v, red_side);
    for (std::size_t i = 0; i < p_; ++i) {
      ok_deg[i] = 0;
      for (unsigned v = 0; v < c.m; ++v)
        if (static_cast<std::size_t>(std::popcount(adj[v])) >= deg_[i]) ok_deg[i] |= Mask{1} << v;
    }
    std::array<unsigned, 64> img{};
    std::function<bool(std::size_t, Mask)> go = [&](std::size_t i, Mask used) {
      if (i == p_) return true;
      Mask cand = ok_deg[i] & ~used;
      for (std::size_t j : back_[i]) cand &= adj[img[j]];
      while (cand) {
        const unsigned x = static_cast<unsigned>(std::countr_zero(cand));
        cand &= cand - 1;
        img[i] = x;
        if (go(i + 1, used | Mask{1} << x)) return true;
      }
      return false;
    };
    return go(0, 0);
  }

 private:
  std::size_t p_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<std::size_t>> back_;
  std::vector<std::size_t> deg_;
};

// t disjoint copies of F_k as one graph, fan j on vertices j(2k+1)...
inline Graph tfan_graph(std::size_t k, std::size_t t) {
  std::vector<Edge> es;
  const std::size_t w = 2 * k + 1;
  for (std::size_t j = 0; j < t; ++j) {
    const VertexId base = static_cast<VertexId>(j * w);
    for (VertexId i = 1; i < w; ++i) es.push_back({base, base + i});
    for (VertexId i = 0; i < k; ++i) es.push_back({base + 1 + 2 * i, base + 2 + 2 * i});
  }
  return Graph(t * w, es);
}

// ---- isomorphism handling -------------------------------------------------

namespace iso {

// Colour refinement on the red graph; colours are isomorphism-invariant.
inline std::vector<std::uint64_t> refine(const SmallColoring& c) {
  std::vector<std::uint64_t> col(c.m), next(c.m);
  for (unsigned v = 0; v < c.m; ++v) col[v] = static_cast<std::uint64_t>(std::popcount(c.red[v]));
  for (unsigned round = 0; round < c.m; ++round) {
    for (unsigned v = 0; v < c.m; ++v) {
      std::vector<std::uint64_t> nb;
      for (unsigned w = 0; w < c.m; ++w)
        if (c.is_red(v, w)) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = col[v] * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL;
      for (auto x : nb) h = splitmix64(h ^ x);
      next[v] = h;
    }
    std::vector<std::uint64_t> a = col, b = next;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t ca = 1, cb = 1;
    for (std::size_t i = 1; i < a.size(); ++i) ca += a[i] != a[i - 1];
    for (std::size_t i = 1; i < b.size(); ++i) cb += b[i] != b[i - 1];
    col.swap(next);
    if (cb == ca) break;
  }
  return col;
}

inline std::uint64_t invariant(const std::vector<std::uint64_t>& colours) {
  std::vector<std::uint64_t> s = colours;
  std::sort(s.begin(), s.end());
  std::uint64_t h = 0x243F6A8885A308D3ULL ^ s.size();
  for (auto x : s) h = splitmix64(h ^ x);
  return h;
}

// Backtracking isomorphism test restricted to equal refined colours.
inline bool isomorphic(const SmallColoring& a, const std::vector<std::uint64_t>& ca,
                       const SmallColoring& b, const std::vector<std::uint64_t>& cb) {
  if (a.m != b.m) return false;
  const unsigned m = a.m;
  std::array<unsigned, 16> img{};
  std::function<bool(unsigned, Mask)> go = [&](unsigned v, Mask used) {
    if (v == m) return true;
    for (unsigned x = 0; x < m; ++x) {
      if (used >> x & 1 || ca[v] != cb[x]) continue;
      bool ok = true;
      for (unsigned u = 0; u < v && ok; ++u) ok = a.is_red(u, v) == b.is_red(img[u], x);
      if (!ok) continue;
      img[v] = x;
      if (go(v + 1, used | Mask{1} << x)) return true;
    }
    return false;
  };
  return go(0, 0);
}

// Greedy relabelling: colour classes first, then each next vertex chosen to
// make its column of the code (pairs (0,j),(1,j),..) smallest, blue < red.
inline SmallColoring greedy_canonical(const SmallColoring& c) {
  const unsigned m = c.m;
  const auto col = refine(c);
  std::vector<unsigned> order;
  std::vector<bool> taken(m, false);
  for (unsigned step = 0; step < m; ++step) {
    int best = -1;
    Mask best_col = 0;
    for (unsigned v = 0; v < m; ++v) {
      if (taken[v]) continue;
      Mask colbits = 0;
      for (unsigned i = 0; i < order.size(); ++i)
        if (c.is_red(order[i], v)) colbits |= Mask{1} << (63 - i);
      const bool better = best < 0 || colbits < best_col ||
                          (colbits == best_col && col[v] < col[static_cast<unsigned>(best)]);
      if (better) {
        best = static_cast<int>(v);
        best_col = colbits;
      }
    }
    taken[static_cast<unsigned>(best)] = true;
    order.push_back(static_cast<unsigned>(best));
  }
  SmallColoring out;
  out.m = c.m;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      if (i != j && c.is_red(order[i], order[j])) out.red[i] |= std::uint16_t(1u << j);
  return out;
}

// Lexicographic order on the upper-triangle code.
inline bool code_less(const SmallColoring& a, const SmallColoring& b) {
  for (unsigned j = 1; j < a.m; ++j)
    for (unsigned i = 0; i < j; ++i)
      if (a.is_red(i, j) != b.is_red(i, j)) return !a.is_red(i, j);
  return false;
}

}  // namespace iso

struct SearchStats {
  std::uint64_t colorings_examined = 0;
  std::uint64_t prune_hits = 0;
  std::vector<std::size_t> classes_per_order;  // good classes on K_1, K_2, ...
  std::optional<TwoColoring> witness;
};

struct ArrowResult {
  bool arrows = false;
  SearchStats stats;
};

inline std::size_t default_threads() {
  if (const char* e = std::getenv("FANGOOD_THREADS")) {
    const long v = std::strtol(e, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Extends colorings avoiding red G and blue H one vertex at a time, keeping
// one representative per isomorphism class.
class RamseyEnumerator {
 public:
  RamseyEnumerator(const Graph& red_target, const Graph& blue_target, std::size_t threads = 1)
      : red_(red_target), blue_(blue_target), threads_(std::max<std::size_t>(1, threads)) {}

  // Good classes on K_m for m = 1..N; stops early at the first empty level.
  std::vector<SmallColoring> run_to(std::size_t N, SearchStats& st) {
    std::vector<SmallColoring> level;
    SmallColoring one;
    one.m = 1;
    level.push_back(one);
    st.classes_per_order.assign(1, good(one) ? 1 : 0);
    if (!good(one)) return {};
    for (std::size_t m = 2; m <= N; ++m) {
      level = extend(level, st);
      st.classes_per_order.push_back(level.size());
      if (level.empty()) break;
    }
    return level;
  }

  bool good(const SmallColoring& c) const {
    return !red_.contained_in(c, true) && !blue_.contained_in(c, false);
  }

 private:
  struct Cand {
    SmallColoring c;
    std::vector<std::uint64_t> colours;
    std::uint64_t inv = 0;
  };

  std::vector<SmallColoring> extend(const std::vector<SmallColoring>& prev, SearchStats& st) {
    const std::size_t T = std::min(threads_, std::max<std::size_t>(1, prev.size()));
    std::vector<std::vector<Cand>> out(T);
    std::vector<std::uint64_t> examined(T, 0), pruned(T, 0);
    auto work = [&](std::size_t tid) {
      for (std::size_t i = tid; i < prev.size(); i += T) {
        const SmallColoring& base = prev[i];
        const unsigned m = base.m;
        for (Mask star = 0; star < (Mask{1} << m); ++star) {
          SmallColoring c = base;
          c.m = static_cast<std::uint8_t>(m + 1);
          for (unsigned v = 0; v < m; ++v)
            if (star >> v & 1) {
              c.red[v] |= std::uint16_t(1u << m);
              c.red[m] |= std::uint16_t(1u << v);
            }
          ++examined[tid];
          if (!good(c)) {
            ++pruned[tid];
            continue;
          }
          Cand cd{c, iso::refine(c), 0};
          cd.inv = iso::invariant(cd.colours);
          out[tid].push_back(std::move(cd));
        }
      }
    };
    if (T == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t tid = 0; tid < T; ++tid) pool.emplace_back(work, tid);
      for (auto& th : pool) th.join();
    }
    // Merge in a fixed order so results do not depend on scheduling.
    std::map<std::uint64_t, std::vector<Cand>> buckets;
    std::vector<SmallColoring> reps;
    std::vector<Cand> all;
    for (std::size_t tid = 0; tid < T; ++tid) {
      st.colorings_examined += examined[tid];
      st.prune_hits += pruned[tid];
      for (auto& c : out[tid]) all.push_back(std::move(c));
    }
    std::stable_sort(all.begin(), all.end(), [](const Cand& a, const Cand& b) {
      return iso::code_less(a.c, b.c);
    });
    for (auto& cd : all) {
      auto& bucket = buckets[cd.inv];
      bool dup = false;
      for (const auto& r : bucket)
        if (iso::isomorphic(cd.c, cd.colours, r.c, r.colours)) {
          dup = true;
          break;
        }
      if (!dup) bucket.push_back(std::move(cd));
    }
    for (auto& [inv, b] : buckets)
      for (auto& cd : b) reps.push_back(iso::greedy_canonical(cd.c));
    std::sort(reps.begin(), reps.end(), iso::code_less);
    return reps;
  }

  MaskSubgraph red_, blue_;
  std::size_t threads_;
};

inline void check_ceiling(std::size_t N, std::size_t ceiling) {
  if (ceiling > kOracleHardCeiling)
    throw HypothesisError("enumeration ceiling above the hard cap of " +
                          std::to_string(kOracleHardCeiling));
  if (N > ceiling)
    throw HypothesisError("order " + std::to_string(N) + " exceeds the enumeration ceiling " +
                          std::to_string(ceiling));
}

// Does every coloring of K_N contain red G or blue H? A false answer carries
// the least (by code) good class as witness.
inline ArrowResult arrows_graph(std::size_t N, const Graph& g, const Graph& h,
                                std::size_t ceiling = kOracleDefaultCeiling,
                                std::size_t threads = 1) {
  check_ceiling(N, ceiling);
  if (N == 0) throw HypothesisError("order must be at least 1");
  ArrowResult r;
  RamseyEnumerator en(g, h, threads);
  auto level = en.run_to(N, r.stats);
  if (r.stats.classes_per_order.size() < N || level.empty()) {
    r.arrows = true;
    return r;
  }
  r.arrows = false;
  r.stats.witness = level.front().to_coloring();
  return r;
}

inline ArrowResult arrows(std::size_t N, const Graph& g, FanSpec spec,
                          std::size_t ceiling = kOracleDefaultCeiling, std::size_t threads = 1) {
  return arrows_graph(N, g, tfan_graph(spec.k, spec.t), ceiling, threads);
}

struct RamseyResult {
  std::optional<std::size_t> value;
  SearchStats stats;
};

// Least N <= N_max with every coloring of K_N forcing a target.
inline RamseyResult ramsey_exact_graph(const Graph& g, const Graph& h, std::size_t n_max,
                                       std::size_t ceiling = kOracleDefaultCeiling,
                                       std::size_t threads = 1) {
  check_ceiling(n_max, ceiling);
  RamseyResult r;
  RamseyEnumerator en(g, h, threads);
  auto level = en.run_to(n_max, r.stats);
  const auto& per = r.stats.classes_per_order;
  for (std::size_t m = 0; m < per.size(); ++m)
    if (per[m] == 0) {
      r.value = m + 1;
      return r;
    }
  if (!level.empty()) r.stats.witness = level.front().to_coloring();
  return r;
}

inline RamseyResult ramsey_exact(const Graph& g, FanSpec spec, std::size_t n_max,
                                 std::size_t ceiling = kOracleDefaultCeiling,
                                 std::size_t threads = 1) {
  return ramsey_exact_graph(g, tfan_graph(spec.k, spec.t), n_max, ceiling, threads);
}

// ---- independence number --------------------------------------------------

inline std::size_t independence_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 40) throw HypothesisError("independence number is exact only up to 40 vertices");
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::size_t best = 0;
  std::function<void(Mask, std::size_t)> go = [&](Mask cand, std::size_t size) {
    // Vertices of degree at most one inside cand can always be taken.
    for (bool again = true; again;) {
      again = false;
      for (Mask c = cand; c; c &= c - 1) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(c));
        if (std::popcount(adj[v] & cand) <= 1) {
          cand &= ~(adj[v] | Mask{1} << v);
          ++size;
          again = true;
          break;
        }
      }
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    if (!cand) {
      best = size;
      return;
    }
    unsigned pick = 0;
    int deg = -1;
    for (Mask c = cand; c; c &= c - 1) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(c));
      const int d = std::popcount(adj[v] & cand);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    go(cand & ~(adj[pick] | Mask{1} << pick), size + 1);
    go(cand & ~(Mask{1} << pick), size);
  };
  go(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, 0);
  return best;
}

}  // namespace fangood
