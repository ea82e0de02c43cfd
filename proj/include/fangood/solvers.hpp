#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fangood/certificate.hpp"
#include "fangood/coloring.hpp"
#include "fangood/coloring_io.hpp"
#include "fangood/errors.hpp"
#include "fangood/graph.hpp"
#include "fangood/graph6.hpp"
#include "fangood/lemmas.hpp"
#include "fangood/matching.hpp"
#include "fangood/sparse.hpp"
#include "fangood/subgraph.hpp"

namespace fangood {

// Snapshot of the two-sided split built while hunting for a red star.
struct PartitionState {
  VertexSet A, S, Z1, Z2, W, W1, W2, S1, S2, A1, A2;
};

inline VertexSet first_n_of(const VertexSet& s, std::size_t m) {
  VertexSet out(s.universe());
  for (VertexId v : s.first_n(m)) out.set(v);
  return out;
}

inline BlueFans fans_plus(BlueFans a, const BlueFan& f) {
  a.fans.push_back(f);
  return a;
}

inline BlueFans fans_plus(BlueFans a, const BlueFans& b) {
  a.fans.insert(a.fans.end(), b.fans.begin(), b.fans.end());
  return a;
}

inline VertexSet fan_vertices(std::size_t universe, const BlueFans& fans) {
  VertexSet s(universe);
  for (const auto& f : fans.fans) {
    s.set(f.center);
    for (auto [a, b] : f.pairs) {
      s.set(a);
      s.set(b);
    }
  }
  return s;
}

// The constructive pipelines. Each works inside an `arena` of host vertices
// and returns host ids; a failed guaranteed step throws EngineDefect.
class Engine {
 public:
  explicit Engine(const TwoColoring& c, std::uint64_t budget = kSearchBudget)
      : col_(c), budget_(budget) {}

  const std::vector<std::string>& trace() const { return trace_; }
  const std::optional<PartitionState>& last_partition() const { return partition_; }

  // r(G, F_k) <= 2n+k-2 for sparse G.
  Certificate weak(const VertexSet& arena, const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    if (arena.count() < n) throw EngineDefect("arena smaller than the graph");
    std::vector<VertexId> img(n, kNoVertex);
    VertexSet used(col_.order());
    PeelResult peel = peel_degree_one(g);
    if (!peel.core_vertices.empty()) {
      note("weak:core");
      ShortenResult sh = shorten_suspended_paths(peel.core, (2 * k + 3) * k);
      EmbedOrFan e = min_degree_embed(col_, sh.graph, k, arena);
      if (auto* f = std::get_if<BlueFan>(&e)) {
        note("weak:core-fan");
        return BlueFans{{*f}};
      }
      const auto& core_img = std::get<RedEmbedding>(e).image;
      auto to_g = [&](VertexId core_id) { return peel.core_vertices[core_id]; };
      for (std::size_t j = 0; j < core_img.size(); ++j) {
        img[to_g(sh.kept[j])] = core_img[j];
        used.set(core_img[j]);
      }
      for (const auto& s : sh.log) {
        std::vector<VertexId> chain;
        for (VertexId c : s.chain.vertices) chain.push_back(to_g(c));
        std::vector<VertexId> path = surviving_path(chain, s.removed, img);
        Lengthened L = lengthen(std::move(path), chain.size(), arena - used, k, 1, true);
        if (L.kind == Lengthened::Fans) {
          note("weak:lengthen-fan");
          return L.fans;
        }
        if (L.kind == Lengthened::Stuck) {
          note("weak:lengthen-no-star");
          VertexSet outside = arena - used;
          for (VertexId x : L.path) outside.reset(x);
          auto r = embed_red(col_, g, outside, {}, budget_);
          if (r.status != SearchStatus::Found)
            throw EngineDefect("no blue K_{1,k} outside, yet no red G there");
          return RedEmbedding{std::move(r.image)};
        }
        for (std::size_t i = 0; i < chain.size(); ++i) {
          img[chain[i]] = L.path[i];
          used.set(L.path[i]);
        }
      }
    }
    for (std::size_t step = peel.removal_order.size(); step-- > 0;) {
      const VertexId v = peel.removal_order[step], par = peel.parent[step];
      VertexSet cand = arena - used;
      if (par != kNoVertex) cand &= col_.red_neighbors(img[par]);
      VertexId x = cand.first();
      if (x == kNoVertex) {
        note("weak:regrow-stuck");
        auto cert = fragment_at(img[par], arena - used, g, k);
        return cert;
      }
      img[v] = x;
      used.set(x);
    }
    return RedEmbedding{std::move(img)};
  }

  // r(G, F_k) = 2n-1 pipeline; arena should hold 2n-1 vertices.
  Certificate fan(const VertexSet& arena, const Graph& g, std::size_t k) {
    if (k == 1) {
      note("fan:k1-weak");
      return weak(arena, g, k);
    }
    const std::size_t n = g.order();
    const TrichotomyParams p{2 * k * k + 4 * k - 1, 2 * k - 2};
    if (n < p.q) {
      note("fan:small-weak");
      return weak(arena, g, k);
    }
    TrichotomyOutcome tri = trichotomy(g, p);
    if (std::holds_alternative<SuspendedPathCase>(tri)) return fan_path_case(arena, g, k, p.q);
    if (auto* mc = std::get_if<EndEdgeMatchingCase>(&tri)) return fan_matching_case(arena, g, k, *mc);
    return fan_star_case(arena, g, k, std::get<StarVertexCase>(tri));
  }

  // Red K_{1,n-1} (as an embedding of star_graph(n)) or blue tF_k; arena
  // should hold 2n+t-2 vertices.
  Certificate star_vs_tfan(const VertexSet& arena, std::size_t n, std::size_t k, std::size_t t) {
    if (auto s = find_red_star(col_, n, arena)) return star_embedding(*s);
    if (t == 1) {
      note("star:t1-scan");
      if (auto f = scan_blue_fan(col_, k, arena.complement())) return BlueFans{{*f}};
      throw EngineDefect("no red star and no blue fan");
    }
    const VertexSet sub = first_n_of(arena, arena.count() - 1);
    Certificate rec = star_vs_tfan(sub, n, k, t - 1);
    if (is_red_certificate(rec)) return rec;
    const BlueFans fans_a = std::get<BlueFans>(rec);
    PartitionState ps;
    ps.A = fan_vertices(col_.order(), fans_a);
    ps.S = arena - ps.A;
    const VertexSet& S = ps.S;
    if (auto f = scan_blue_fan(col_, k, S.complement())) {
      note("star:fan-in-S");
      return fans_plus(fans_a, *f);
    }
    const long long lo = static_cast<long long>(n) - 2LL * static_cast<long long>(k * t) +
                         2LL * static_cast<long long>(k);
    const std::size_t hi = n + k - 2;
    S.for_each([&](VertexId v) {
      const std::size_t d = col_.blue_degree_in(v, S);
      if (static_cast<long long>(d) < lo || d > hi)
        throw EngineDefect("blue degree " + std::to_string(d) + " of vertex " + std::to_string(v) +
                           " inside S is outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    });
    const VertexId v0 = S.first();
    VertexSet xv(col_.order());
    ps.Z1 = near_red_core(v0, S, &xv);
    VertexId u = kNoVertex;
    for (VertexId x = xv.first(); x != kNoVertex; x = xv.after(x))
      if (!col_.blue_neighbors(x).intersects(ps.Z1)) {
        u = x;
        break;
      }
    if (u == kNoVertex) throw EngineDefect("no vertex of X_v is red to all of Z_v");
    ps.Z2 = near_red_core(u, S, nullptr);
    if (ps.Z1.intersects(ps.Z2)) throw EngineDefect("Z_1 and Z_2 overlap");
    ps.W = S - ps.Z1 - ps.Z2;
    ps.W1 = VertexSet(col_.order());
    ps.W2 = VertexSet(col_.order());
    for (VertexId w = ps.W.first(); w != kNoVertex; w = ps.W.after(w)) {
      const VertexSet b1 = col_.blue_neighbors_in(w, ps.Z1), b2 = col_.blue_neighbors_in(w, ps.Z2);
      if (b1.count() + 1 <= k) {
        ps.W1.set(w);
      } else if (b2.count() + 1 <= k) {
        ps.W2.set(w);
      } else {
        // Both sides are blue-rich at w: a blue kK_2 across them closes a fan.
        note("star:w-cross-fan");
        auto pairs = cross_blue_matching(b1, b2, k);
        if (pairs.size() < k) throw EngineDefect("no blue kK_2 across Z_1 and Z_2 at w");
        partition_ = ps;
        return fans_plus(fans_a, BlueFan{w, std::move(pairs)});
      }
    }
    ps.S1 = ps.Z1 | ps.W1;
    ps.S2 = ps.Z2 | ps.W2;
    ps.A1 = VertexSet(col_.order());
    ps.A2 = VertexSet(col_.order());
    ps.A.for_each([&](VertexId a) {
      if (col_.blue_degree_in(a, ps.S1) + 1 <= k) ps.A1.set(a);
      if (col_.blue_degree_in(a, ps.S2) + 1 <= k) ps.A2.set(a);
    });
    partition_ = ps;
    // A fan of A with two vertices blue-rich on both sides splits into two.
    for (std::size_t f = 0; f < fans_a.fans.size(); ++f) {
      std::vector<VertexId> rich;
      for (VertexId a : fan_vertices(col_.order(), BlueFans{{fans_a.fans[f]}}).to_vector())
        if (!ps.A1.test(a) && !ps.A2.test(a)) rich.push_back(a);
      for (std::size_t i = 0; i < rich.size(); ++i)
        for (std::size_t j = 0; j < rich.size(); ++j) {
          if (i == j) continue;
          VertexSet forbid = S.complement();
          auto f1 = find_blue_fan_at(col_, rich[i], k, forbid);
          if (!f1) continue;
          forbid |= fan_vertices(col_.order(), BlueFans{{*f1}});
          auto f2 = find_blue_fan_at(col_, rich[j], k, forbid);
          if (!f2) continue;
          note("star:split-fan");
          BlueFans out;
          for (std::size_t g2 = 0; g2 < fans_a.fans.size(); ++g2)
            if (g2 != f) out.fans.push_back(fans_a.fans[g2]);
          out.fans.push_back(*f1);
          out.fans.push_back(*f2);
          return out;
        }
    }
    for (int side = 1; side <= 2; ++side) {
      const VertexSet part = side == 1 ? (ps.S1 | ps.A1) : (ps.S2 | ps.A2);
      if (part.count() < n) continue;
      if (auto s = find_red_star(col_, n, part)) {
        note(side == 1 ? "star:red-star-side1" : "star:red-star-side2");
        return star_embedding(*s);
      }
    }
    throw EngineDefect("partition produced neither a red star nor a blue tF_k");
  }

  // r(G, tF_k) = 2n+t-2 pipeline; arena should hold 2n+t-2 vertices.
  Certificate tfan(const VertexSet& arena, const Graph& g, std::size_t k, std::size_t t) {
    if (t == 1) return fan(arena, g, k);
    const std::size_t n = g.order();
    const TrichotomyParams p{2 * k * k * t + 4 * k * t + t - k, 3 * k * t - k - 2};
    if (n < p.q) throw EngineDefect("order " + std::to_string(n) + " below q = " + std::to_string(p.q));
    TrichotomyOutcome tri = trichotomy(g, p);
    if (std::holds_alternative<SuspendedPathCase>(tri)) return tfan_path_case(arena, g, k, t, p.q);
    if (auto* mc = std::get_if<EndEdgeMatchingCase>(&tri))
      return tfan_matching_case(arena, g, k, t, *mc);
    return tfan_star_case(arena, g, k, t, std::get<StarVertexCase>(tri));
  }

 private:
  struct Lengthened {
    enum Kind { Done, Fans, Stuck } kind = Done;
    std::vector<VertexId> path;
    BlueFans fans;
  };

  void note(std::string s) { trace_.push_back(std::move(s)); }

  Certificate star_embedding(const Star& s) {
    RedEmbedding e{{s.center}};
    e.image.insert(e.image.end(), s.leaves.begin(), s.leaves.end());
    return e;
  }

  // Host images of the chain after `removed` vertices next to its first end
  // were dropped.
  static std::vector<VertexId> surviving_path(const std::vector<VertexId>& chain,
                                              std::size_t removed,
                                              const std::vector<VertexId>& img) {
    std::vector<VertexId> path{img[chain[0]]};
    for (std::size_t i = removed + 1; i < chain.size(); ++i) path.push_back(img[chain[i]]);
    return path;
  }

  bool insert_once(std::vector<VertexId>& path, VertexSet& pool) const {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      VertexSet c = col_.red_neighbors(path[i]);
      c &= col_.red_neighbors(path[i + 1]);
      c &= pool;
      if (VertexId y = c.first(); y != kNoVertex) {
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, y);
        pool.reset(y);
        return true;
      }
    }
    return false;
  }

  // Grow a red path with fixed ends to `target` vertices using `pool`. With
  // stars allowed, a stuck path is pushed on by path extension against t
  // blue K_{1,k}; without them (or if none exist) it reports Stuck.
  Lengthened lengthen(std::vector<VertexId> path, std::size_t target, VertexSet pool,
                      std::size_t k, std::size_t t, bool allow_stars) {
    Lengthened out;
    while (path.size() < target) {
      if (insert_once(path, pool)) continue;
      std::optional<std::vector<Star>> stars;
      if (allow_stars) {
        if (t == 1) {
          if (auto s = find_blue_star(col_, pool, k)) stars = std::vector<Star>{*s};
        } else {
          stars = find_blue_stars(col_, pool, k, t);
        }
      }
      if (!stars) {
        out.kind = Lengthened::Stuck;
        out.path = std::move(path);
        return out;
      }
      std::vector<VertexId> ys;
      for (const auto& s : *stars) {
        ys.push_back(s.center);
        ys.insert(ys.end(), s.leaves.begin(), s.leaves.end());
      }
      PathExtensionOutcome pe = extend_path(col_, path, ys, (2 * k + 1) * t, k * t);
      if (auto* e = std::get_if<ExtendedPath>(&pe)) {
        for (VertexId y : ys)
          if (std::find(e->path.begin(), e->path.end(), y) != e->path.end()) pool.reset(y);
        path = std::move(e->path);
        continue;
      }
      out.kind = Lengthened::Fans;
      if (auto* c = std::get_if<BlueClique>(&pe)) {
        note("lengthen:clique");
        out.fans = fans_from_clique(c->vertices, k, t);
      } else {
        note("lengthen:dominated");
        out.fans = fans_from_stars(*stars, std::get<BlueDominated>(pe).vertices, k);
      }
      return out;
    }
    out.path = std::move(path);
    return out;
  }

  // `center` is blue to every vertex of `pool`: blue kK_2 there closes a fan,
  // otherwise the pool holds a red G.
  Certificate fragment_at(VertexId center, const VertexSet& pool, const Graph& g, std::size_t k) {
    if (pool.count() < g.order() + k - 1)
      throw EngineDefect("blue neighbourhood of " + std::to_string(center) + " has only " +
                         std::to_string(pool.count()) + " free vertices");
    Fragment f = red_G_or_blue_kK2(col_, pool, g, k, budget_);
    if (auto* bm = std::get_if<BlueMatching>(&f)) return BlueFans{{BlueFan{center, bm->pairs}}};
    return std::get<RedEmbedding>(f);
  }

  // Lowest-index chain of g of order at least q.
  static SuspendedChain long_chain(const Graph& g, std::size_t q) {
    for (auto& c : suspended_chains(g))
      if (c.order() >= q) return c;
    throw EngineDefect("suspended path vanished");
  }

  // Red H (from a shortened chain) lengthened back to G by insertion inside
  // `within`; throws if insertion stalls.
  std::optional<std::vector<VertexId>> embed_and_lengthen(const Graph& g, const ShortenResult& sh,
                                                          const VertexSet& within) {
    auto r = embed_red(col_, sh.graph, within, {}, budget_);
    if (r.status != SearchStatus::Found) return std::nullopt;
    std::vector<VertexId> img(g.order(), kNoVertex);
    VertexSet used(col_.order());
    for (std::size_t j = 0; j < r.image.size(); ++j) {
      img[sh.kept[j]] = r.image[j];
      used.set(r.image[j]);
    }
    const Shortening& s = sh.log.front();
    std::vector<VertexId> path = surviving_path(s.chain.vertices, s.removed, img);
    VertexSet pool = within - used;
    while (path.size() < s.chain.order())
      if (!insert_once(path, pool)) return img;  // partial; caller inspects
    for (std::size_t i = 0; i < path.size(); ++i) img[s.chain.vertices[i]] = path[i];
    return img;
  }

  static bool complete_image(const std::vector<VertexId>& img) {
    return std::find(img.begin(), img.end(), kNoVertex) == img.end();
  }

  Certificate fan_path_case(const VertexSet& arena, const Graph& g, std::size_t k, std::size_t q) {
    note("fan:case1");
    const SuspendedChain chain = long_chain(g, q);
    const ShortenResult sh = shorten_chain(g, chain, k - 1);
    Certificate ch = weak(arena, sh.graph, k);
    if (!is_red_certificate(ch)) return ch;
    const auto& himg = std::get<RedEmbedding>(ch).image;
    std::vector<VertexId> img(g.order(), kNoVertex);
    VertexSet used(col_.order());
    for (std::size_t j = 0; j < himg.size(); ++j) {
      img[sh.kept[j]] = himg[j];
      used.set(himg[j]);
    }
    std::vector<VertexId> path = surviving_path(chain.vertices, k - 1, img);
    Lengthened L = lengthen(path, chain.order(), arena - used, k, 1, true);
    if (L.kind == Lengthened::Fans) return L.fans;
    if (L.kind == Lengthened::Done) {
      for (std::size_t i = 0; i < chain.order(); ++i) img[chain.vertices[i]] = L.path[i];
      return RedEmbedding{std::move(img)};
    }
    note("fan:case1-S");
    VertexSet S = arena - used;
    for (VertexId x : L.path) S.reset(x);
    auto again = embed_and_lengthen(g, sh, S);
    if (!again) throw EngineDefect("no blue K_{1,k} in S, yet no red H there");
    if (!complete_image(*again)) throw EngineDefect("suspended path stalled inside S");
    return RedEmbedding{std::move(*again)};
  }

  Certificate fan_matching_case(const VertexSet& arena, const Graph& g, std::size_t k,
                                const EndEdgeMatchingCase& mc) {
    note("fan:case2");
    auto [h, keep] = delete_leaves(g, mc.edges);
    Certificate ch = weak(arena, h, k);
    if (!is_red_certificate(ch)) return ch;
    return attach_leaves(arena, g, k, 1, mc.edges, keep, std::get<RedEmbedding>(ch).image, {});
  }

  // G minus the leaves of the given end-edges; keep[j] is the G id of H's j.
  static std::pair<Graph, std::vector<VertexId>> delete_leaves(const Graph& g,
                                                               const std::vector<Edge>& ends) {
    std::vector<bool> drop(g.order(), false);
    for (auto [s, l] : ends) drop[l] = true;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.order(); ++v)
      if (!drop[v]) keep.push_back(v);
    return {g.induced(keep), keep};
  }

  // Red H is placed; hang the deleted leaves off their supports through a
  // red matching, or exploit the blue biclique Hall's theorem leaves behind.
  Certificate attach_leaves(const VertexSet& arena, const Graph& g, std::size_t k, std::size_t t,
                            const std::vector<Edge>& ends, const std::vector<VertexId>& keep,
                            const std::vector<VertexId>& himg, const BlueFans& fans_a) {
    std::vector<VertexId> img(g.order(), kNoVertex);
    VertexSet used(col_.order());
    for (std::size_t j = 0; j < keep.size(); ++j) {
      img[keep[j]] = himg[j];
      used.set(himg[j]);
    }
    std::vector<VertexId> xs;
    for (auto [s, l] : ends) xs.push_back(img[s]);
    const std::vector<VertexId> ys = (arena - used).to_vector();
    HallOutcome ho = hall_dichotomy(col_, xs, ys);
    if (auto* rm = std::get_if<RedMatching>(&ho)) {
      for (std::size_t i = 0; i < ends.size(); ++i) img[ends[i].second] = rm->pairs[i].second;
      return RedEmbedding{std::move(img)};
    }
    note("attach:biclique");
    const auto& bc = std::get<BlueBiclique>(ho);
    const VertexSet yp = VertexSet::of(col_.order(), bc.ys);
    const VertexSet a_set = fan_vertices(col_.order(), fans_a);
    const VertexSet yps = yp - a_set;
    const VertexId x0 = bc.xs[0];
    if (yps.count() >= g.order() + k - 1) {
      note("attach:large-Y");
      Certificate c = fragment_at(x0, yps, g, k);
      if (is_red_certificate(c)) return c;
      return fans_plus(fans_a, std::get<BlueFans>(c));
    }
    auto m = max_blue_matching_in(col_, yp, k * t);
    if (m.size() >= k * t && bc.xs.size() >= t) {
      note("attach:matching");
      return fans_from_matching(std::span(bc.xs).first(t), m, k);
    }
    std::optional<std::vector<Star>> stars;
    if (t == 1) {
      if (auto s = find_blue_star(col_, yp, k)) stars = std::vector<Star>{*s};
    } else {
      stars = find_blue_stars(col_, yp, k, t);
    }
    if (stars && bc.xs.size() >= k * t) {
      note("attach:stars");
      return fans_from_stars(*stars, bc.xs, k);
    }
    note("attach:embed-Y");
    auto r = embed_red(col_, g, yp, {}, budget_);
    if (r.status != SearchStatus::Found)
      throw EngineDefect("biclique side of order " + std::to_string(yp.count()) +
                         " holds no red G and no blue fan structure");
    return RedEmbedding{std::move(r.image)};
  }

  Certificate fan_star_case(const VertexSet& arena, const Graph& g, std::size_t k,
                            const StarVertexCase& sc) {
    note("fan:case3");
    Star red_star;
    if (auto s = find_red_star(col_, g.order(), arena)) {
      red_star = *s;
    } else {
      Certificate c = star_vs_tfan(arena, g.order(), k, 1);
      if (!is_red_certificate(c)) return c;
      const auto& im = std::get<RedEmbedding>(c).image;
      red_star = Star{im[0], {im.begin() + 1, im.end()}};
    }
    return star_anchored(arena, g, k, 1, sc.center, red_star);
  }

  // Embed G' (G minus its leaves) inside N_R(x), move v onto x, then attach
  // the remaining leaves greedily; the leaves of v go last onto x's red
  // neighbourhood.
  Certificate star_anchored(const VertexSet& arena, const Graph& g, std::size_t k, std::size_t t,
                            VertexId v, const Star& star) {
    const VertexId x = star.center;
    std::vector<VertexId> core;
    for (VertexId u = 0; u < g.order(); ++u)
      if (g.degree(u) != 1) core.push_back(u);
    const Graph gp = g.induced(core);
    const VertexSet host = col_.red_neighbors(x) & arena;
    std::vector<VertexId> img(g.order(), kNoVertex);
    VertexSet used(col_.order());
    if (gp.order() == 1) {
      img[core[0]] = x;
      used.set(x);
    } else {
      BlueFans found;
      VertexSet h = host;
      for (;;) {
        EmbedOrFan e = min_degree_embed(col_, gp, k, h);
        if (auto* f = std::get_if<BlueFan>(&e)) {
          found.fans.push_back(*f);
          if (found.fans.size() == t) {
            note("anchor:fans-in-red-nbhd");
            return found;
          }
          h -= fan_vertices(col_.order(), BlueFans{{*f}});
          continue;
        }
        const auto& ci = std::get<RedEmbedding>(e).image;
        for (std::size_t j = 0; j < core.size(); ++j) {
          img[core[j]] = ci[j];
          used.set(ci[j]);
        }
        break;
      }
      used.reset(img[v]);
      img[v] = x;
      used.set(x);
    }
    for (VertexId u = 0; u < g.order(); ++u) {
      if (g.degree(u) != 1) continue;
      const VertexId par = g.neighbors(u)[0];
      if (par == v) continue;
      VertexSet cand = (arena - used) & col_.red_neighbors(img[par]);
      VertexId y = cand.first();
      if (y == kNoVertex) {
        note("anchor:stuck");
        const VertexId z = img[par];
        BlueFans fans_a;
        if (t > 1) {
          VertexSet rest = arena;
          rest.reset(z);
          Certificate rec = tfan(first_n_of(rest, 2 * g.order() + t - 3), g, k, t - 1);
          if (is_red_certificate(rec)) return rec;
          fans_a = std::get<BlueFans>(rec);
        }
        VertexSet pool = col_.blue_neighbors(z) & arena;
        pool -= fan_vertices(col_.order(), fans_a);
        Certificate c = fragment_at(z, pool, g, k);
        if (is_red_certificate(c)) return c;
        return fans_plus(fans_a, std::get<BlueFans>(c));
      }
      img[u] = y;
      used.set(y);
    }
    VertexSet cand = (arena - used) & col_.red_neighbors(x);
    for (VertexId u : g.neighbors(v)) {
      if (g.degree(u) != 1) continue;
      VertexId y = cand.first();
      if (y == kNoVertex) throw EngineDefect("red star center ran out of red neighbours");
      img[u] = y;
      cand.reset(y);
    }
    return RedEmbedding{std::move(img)};
  }

  // Z_v of the partition: blue neighbourhood of v in S minus the matched
  // vertices with two or more blue neighbours among the unmatched ones.
  VertexSet near_red_core(VertexId v, const VertexSet& S, VertexSet* xv_out) {
    const VertexSet nb = col_.blue_neighbors_in(v, S);
    const auto mv = max_blue_matching_in(col_, nb);
    VertexSet xv = nb;
    for (auto [a, b] : mv) {
      xv.reset(a);
      xv.reset(b);
    }
    VertexSet z = nb;
    for (auto [a, b] : mv)
      for (VertexId y : {a, b})
        if (col_.blue_degree_in(y, xv) >= 2) z.reset(y);
    if (xv_out) *xv_out = xv;
    return z;
  }

  std::vector<Edge> cross_blue_matching(const VertexSet& left, const VertexSet& right,
                                        std::size_t k) {
    const auto ls = left.to_vector(), rs = right.to_vector();
    std::vector<std::vector<std::size_t>> adj(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = 0; j < rs.size(); ++j)
        if (col_.is_blue(ls[i], rs[j])) adj[i].push_back(j);
    auto m = kuhn_matching(adj, rs.size());
    std::vector<Edge> out;
    for (std::size_t i = 0; i < ls.size() && out.size() < k; ++i)
      if (m.x_to_y[i] != SIZE_MAX) out.emplace_back(ls[i], rs[m.x_to_y[i]]);
    return out;
  }

  // Disjoint applications of the fan pipeline to a graph of order h until
  // it yields a red copy or t blue fans.
  std::variant<std::vector<VertexId>, BlueFans> repeated_fan(const VertexSet& arena, const Graph& h,
                                                             std::size_t k, std::size_t t) {
    BlueFans found;
    VertexSet avail = arena;
    while (found.fans.size() < t) {
      Certificate c = fan(first_n_of(avail, 2 * h.order() - 1), h, k);
      if (auto* e = std::get_if<RedEmbedding>(&c)) return e->image;
      for (const auto& f : std::get<BlueFans>(c).fans) found.fans.push_back(f);
      avail -= fan_vertices(col_.order(), std::get<BlueFans>(c));
    }
    return found;
  }

  Certificate tfan_path_case(const VertexSet& arena, const Graph& g, std::size_t k, std::size_t t,
                             std::size_t q) {
    note("tfan:case1");
    const SuspendedChain chain = long_chain(g, q);
    const ShortenResult sh = shorten_chain(g, chain, k * t - k + 1);
    auto rf = repeated_fan(arena, sh.graph, k, t);
    if (auto* fans = std::get_if<BlueFans>(&rf)) return *fans;
    const auto& himg = std::get<std::vector<VertexId>>(rf);
    std::vector<VertexId> img(g.order(), kNoVertex);
    VertexSet used(col_.order());
    for (std::size_t j = 0; j < himg.size(); ++j) {
      img[sh.kept[j]] = himg[j];
      used.set(himg[j]);
    }
    std::vector<VertexId> path = surviving_path(chain.vertices, k * t - k + 1, img);
    Lengthened L = lengthen(path, chain.order(), arena - used, k, t, true);
    if (L.kind == Lengthened::Fans) return L.fans;
    if (L.kind == Lengthened::Done) {
      for (std::size_t i = 0; i < chain.order(); ++i) img[chain.vertices[i]] = L.path[i];
      return RedEmbedding{std::move(img)};
    }
    note("tfan:case1-S");
    VertexSet S = arena - used;
    for (VertexId x : L.path) S.reset(x);
    const ShortenResult sh0 = shorten_chain(g, chain, k - 1);
    auto again = embed_and_lengthen(g, sh0, S);
    if (!again) throw EngineDefect("no blue tK_{1,k} in S, yet no red H_0 there");
    if (complete_image(*again)) return RedEmbedding{std::move(*again)};
    // Stalled: the unused vertices of S are blue to half the path, which
    // gives blue stars after all; push the outer path on with them.
    note("tfan:case1-stall-stars");
    VertexSet in_h0(col_.order());
    for (VertexId x : *again)
      if (x != kNoVertex) in_h0.set(x);
    std::vector<Star> stars;
    VertexSet free_leaves = in_h0;
    for (VertexId c : (S - in_h0).first_n(t)) {
      VertexSet b = col_.blue_neighbors(c) & free_leaves;
      if (b.count() < k) throw EngineDefect("stalled vertex has too few blue path neighbours");
      Star s{c, b.first_n(k)};
      for (VertexId l : s.leaves) free_leaves.reset(l);
      stars.push_back(std::move(s));
    }
    if (stars.size() < t) throw EngineDefect("too few stalled vertices in S");
    std::vector<VertexId> ys;
    for (const auto& s : stars) {
      ys.push_back(s.center);
      ys.insert(ys.end(), s.leaves.begin(), s.leaves.end());
    }
    PathExtensionOutcome pe = extend_path(col_, L.path, ys, (2 * k + 1) * t, k * t);
    if (auto* c = std::get_if<BlueClique>(&pe)) return fans_from_clique(c->vertices, k, t);
    if (auto* d = std::get_if<BlueDominated>(&pe)) return fans_from_stars(stars, d->vertices, k);
    throw EngineDefect("maximal path extended after insertion stalled");
  }

  Certificate tfan_matching_case(const VertexSet& arena, const Graph& g, std::size_t k,
                                 std::size_t t, const EndEdgeMatchingCase& mc) {
    note("tfan:case2");
    const std::size_t n = g.order();
    Certificate rec = tfan(first_n_of(arena, 2 * n + t - 3), g, k, t - 1);
    if (is_red_certificate(rec)) return rec;
    const BlueFans fans_a = std::get<BlueFans>(rec);
    const VertexSet S = arena - fan_vertices(col_.order(), fans_a);
    auto [h, keep] = delete_leaves(g, mc.edges);
    Certificate ch = fan(S, h, k);
    if (!is_red_certificate(ch)) return fans_plus(fans_a, std::get<BlueFans>(ch));
    return attach_leaves(arena, g, k, t, mc.edges, keep, std::get<RedEmbedding>(ch).image, fans_a);
  }

  Certificate tfan_star_case(const VertexSet& arena, const Graph& g, std::size_t k, std::size_t t,
                             const StarVertexCase& sc) {
    note("tfan:case3");
    Star red_star;
    if (auto s = find_red_star(col_, g.order(), arena)) {
      red_star = *s;
    } else {
      Certificate c = star_vs_tfan(arena, g.order(), k, t);
      if (!is_red_certificate(c)) return c;
      const auto& im = std::get<RedEmbedding>(c).image;
      red_star = Star{im[0], {im.begin() + 1, im.end()}};
    }
    return star_anchored(arena, g, k, t, sc.center, red_star);
  }

  const TwoColoring& col_;
  std::uint64_t budget_;
  std::vector<std::string> trace_;
  std::optional<PartitionState> partition_;
};

// ---- checked entry points -------------------------------------------------

enum class SolveMode { Strict, Opportunistic };
enum class SolveStatus { Certified, Refused, Exhausted, Defect };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Certified: return "certified";
    case SolveStatus::Refused: return "refused";
    case SolveStatus::Exhausted: return "exhausted";
    case SolveStatus::Defect: return "defect";
  }
  return "?";
}

struct SolveReport {
  SolveStatus status = SolveStatus::Exhausted;
  std::optional<Certificate> certificate;
  std::string detail;
  std::vector<std::string> trace;
};

// Hypothesis checks in exact integer arithmetic. Each returns an empty
// string when satisfied, otherwise the failing inequality.
namespace hyp {

inline std::string need(bool ok, const std::string& what) { return ok ? "" : what; }

// m <= n(1 + den_num/den) written as m*den <= n*(den + den_num).
inline bool edge_bound(std::size_t n, std::size_t m, unsigned long long den,
                       unsigned long long num = 1) {
  return static_cast<unsigned long long>(m) * den <= static_cast<unsigned long long>(n) * (den + num);
}

inline std::string weak(const Graph& g, std::size_t k, std::size_t N) {
  const std::size_t n = g.order(), m = g.size();
  const unsigned long long K = k;
  if (!is_connected(g)) return "G is not connected";
  if (n < 6 * K * K * K) return "n < 6k^3";
  if (!edge_bound(n, m, 12 * K * K * K + 24 * K * K + 11 * K, 2))
    return "e(G) > n(1+1/(6k^3+12k^2+11k/2))";
  if (N < 2 * n + k - 2) return "N < 2n+k-2";
  return "";
}

inline std::string fan(const Graph& g, std::size_t k, std::size_t N) {
  const std::size_t n = g.order(), m = g.size();
  const unsigned long long K = k;
  if (!is_connected(g)) return "G is not connected";
  if (n < 36 * K * K * K * K) return "n < 36k^4";
  if (!edge_bound(n, m, 204 * K * K * K + 126 * K * K)) return "e(G) > n(1+1/(204k^3+126k^2))";
  if (N < 2 * n - 1) return "N < 2n-1";
  return "";
}

inline std::string star_vs_tfan(std::size_t n, std::size_t k, std::size_t t, std::size_t N) {
  if (n < std::max(12 * t * k + 2 * k, 4 * t * k * k)) return "n < max{12tk+2k, 4tk^2}";
  if (N < 2 * n + t - 2) return "N < 2n+t-2";
  return "";
}

inline std::string tfan(const Graph& g, std::size_t k, std::size_t t, std::size_t N) {
  const std::size_t n = g.order(), m = g.size();
  const unsigned long long K = k, T = t;
  if (!is_connected(g)) return "G is not connected";
  if (n < 161 * T * T * K * K * K * K) return "n < 161t^2k^4";
  if (!edge_bound(n, m, 204 * T * K * K * K + 147 * T * K * K))
    return "e(G) > n(1+1/(204tk^3+147tk^2))";
  if (N < 2 * n + t - 2) return "N < 2n+t-2";
  return "";
}

}  // namespace hyp

namespace detail {

template <class Run>
SolveReport run_checked(const TwoColoring& c, const Graph& g, std::size_t k, std::size_t t,
                        SolveMode mode, const std::string& failed_hypothesis, std::size_t need_n,
                        Run&& run) {
  SolveReport rep;
  if (!failed_hypothesis.empty() && mode == SolveMode::Strict) {
    rep.status = SolveStatus::Refused;
    rep.detail = "hypothesis fails: " + failed_hypothesis;
    return rep;
  }
  if (c.order() < need_n) {
    rep.status = mode == SolveMode::Strict ? SolveStatus::Refused : SolveStatus::Exhausted;
    rep.detail = "coloring has " + std::to_string(c.order()) + " vertices, need " +
                 std::to_string(need_n);
    return rep;
  }
  Engine eng(c);
  const VertexSet arena = first_n_of(VertexSet::full(c.order()), need_n);
  try {
    Certificate cert = run(eng, arena);
    rep.trace = eng.trace();
    VerifyResult vr = verify_certificate(c, g, k, t, cert);
    if (!vr) throw EngineDefect("certificate failed verification: " + vr.detail);
    rep.status = SolveStatus::Certified;
    rep.certificate = std::move(cert);
  } catch (const Error& e) {
    rep.trace = eng.trace();
    // In range, a failure contradicts the theorem whatever the mode.
    rep.status = failed_hypothesis.empty() ? SolveStatus::Defect : SolveStatus::Exhausted;
    rep.detail = std::string(e.what()) + " [graph6 " + write_graph6(g) + ", coloring hash " +
                 std::to_string(fnv1a64(write_coloring(c))) + "]";
  }
  return rep;
}

}  // namespace detail

inline SolveReport solve_weak(const TwoColoring& c, const Graph& g, std::size_t k,
                              SolveMode mode = SolveMode::Strict) {
  const std::size_t need = 2 * g.order() + k - 2;
  return detail::run_checked(c, g, k, 1, mode, hyp::weak(g, k, c.order()), need,
                             [&](Engine& e, const VertexSet& a) { return e.weak(a, g, k); });
}

inline SolveReport solve_fan(const TwoColoring& c, const Graph& g, std::size_t k,
                             SolveMode mode = SolveMode::Strict) {
  const std::size_t need = 2 * g.order() - 1;
  return detail::run_checked(c, g, k, 1, mode, hyp::fan(g, k, c.order()), need,
                             [&](Engine& e, const VertexSet& a) { return e.fan(a, g, k); });
}

inline SolveReport solve_star_vs_tfan(const TwoColoring& c, std::size_t n, std::size_t k,
                                      std::size_t t, SolveMode mode = SolveMode::Strict) {
  const Graph star = star_graph(n);
  const std::size_t need = 2 * n + t - 2;
  return detail::run_checked(
      c, star, k, t, mode, hyp::star_vs_tfan(n, k, t, c.order()), need,
      [&](Engine& e, const VertexSet& a) { return e.star_vs_tfan(a, n, k, t); });
}

inline SolveReport solve_tfan(const TwoColoring& c, const Graph& g, std::size_t k, std::size_t t,
                              SolveMode mode = SolveMode::Strict) {
  const std::size_t need = 2 * g.order() + t - 2;
  return detail::run_checked(c, g, k, t, mode, hyp::tfan(g, k, t, c.order()), need,
                             [&](Engine& e, const VertexSet& a) { return e.tfan(a, g, k, t); });
}

}  // namespace fangood
