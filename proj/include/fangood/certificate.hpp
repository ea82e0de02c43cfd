#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fangood/coloring.hpp"
#include "fangood/graph.hpp"

namespace fangood {

struct RedEmbedding {
  std::vector<VertexId> image;  // image[g] = host vertex of pattern vertex g
};

struct BlueFan {
  VertexId center = kNoVertex;
  std::vector<Edge> pairs;
};

struct BlueFans {
  std::vector<BlueFan> fans;
};

using Certificate = std::variant<RedEmbedding, BlueFans>;

inline bool is_red_certificate(const Certificate& c) {
  return std::holds_alternative<RedEmbedding>(c);
}

struct VerifyResult {
  bool ok = true;
  std::string detail;

  explicit operator bool() const { return ok; }
  static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {
inline std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
}  // namespace detail

// Checks a certificate against the coloring with plain loops only.
inline VerifyResult verify_certificate(const TwoColoring& c, const Graph& g, std::size_t k,
                                       std::size_t t, const Certificate& cert) {
  const std::size_t n = c.order();
  if (auto* emb = std::get_if<RedEmbedding>(&cert)) {
    if (emb->image.size() != g.order())
      return VerifyResult::fail("embedding has " + std::to_string(emb->image.size()) +
                                " entries for a pattern of order " + std::to_string(g.order()));
    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < emb->image.size(); ++i) {
      const std::size_t x = emb->image[i];
      if (x >= n) return VerifyResult::fail("vertex " + std::to_string(i) + " maps outside K_N");
      if (hit[x]) return VerifyResult::fail("host vertex " + std::to_string(x) + " used twice");
      hit[x] = 1;
    }
    for (auto [u, v] : g.edges()) {
      const VertexId a = emb->image[u], b = emb->image[v];
      if (!c.is_red(a, b))
        return VerifyResult::fail("edge " + detail::pair_str(u, v) + " maps to blue pair " +
                                  detail::pair_str(a, b));
    }
    return {};
  }
  const auto& fans = std::get<BlueFans>(cert).fans;
  if (fans.size() != t)
    return VerifyResult::fail("expected " + std::to_string(t) + " fans, got " +
                              std::to_string(fans.size()));
  std::vector<char> hit(n, 0);
  auto claim = [&](std::size_t x) {
    if (x >= n) return false;
    if (hit[x]) return false;
    hit[x] = 1;
    return true;
  };
  for (std::size_t f = 0; f < fans.size(); ++f) {
    const auto& fan = fans[f];
    const std::string where = "fan " + std::to_string(f);
    if (fan.pairs.size() != k)
      return VerifyResult::fail(where + " has " + std::to_string(fan.pairs.size()) +
                                " pairs, expected " + std::to_string(k));
    if (!claim(fan.center))
      return VerifyResult::fail(where + ": center " + std::to_string(fan.center) +
                                " out of range or reused");
    for (auto [a, b] : fan.pairs) {
      if (!claim(a) || !claim(b))
        return VerifyResult::fail(where + ": pair " + detail::pair_str(a, b) +
                                  " out of range or reuses a vertex");
      if (c.is_red(a, b))
        return VerifyResult::fail(where + ": pair " + detail::pair_str(a, b) + " is red");
      if (c.is_red(fan.center, a) || c.is_red(fan.center, b))
        return VerifyResult::fail(where + ": pair " + detail::pair_str(a, b) +
                                  " not blue to center " + std::to_string(fan.center));
    }
  }
  return {};
}

inline Certificate lift(const Certificate& cert, std::span<const VertexId> to_parent) {
  if (auto* emb = std::get_if<RedEmbedding>(&cert)) {
    RedEmbedding out;
    for (VertexId x : emb->image) out.image.push_back(to_parent[x]);
    return out;
  }
  BlueFans out;
  for (const auto& f : std::get<BlueFans>(cert).fans) {
    BlueFan g{to_parent[f.center], {}};
    for (auto [a, b] : f.pairs) g.pairs.emplace_back(to_parent[a], to_parent[b]);
    out.fans.push_back(std::move(g));
  }
  return out;
}

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace fangood
