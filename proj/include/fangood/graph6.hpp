#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fangood/errors.hpp"
#include "fangood/graph.hpp"

namespace fangood {

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

inline std::string write_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  auto push6 = [&](std::uint64_t x) { out.push_back(static_cast<char>(63 + (x & 63))); };
  if (n <= 62) {
    push6(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) push6(n >> s);
  } else {
    out.append("~~");
    for (int s = 30; s >= 0; s -= 6) push6(n >> s);
  }
  unsigned acc = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        push6(acc);
        acc = 0;
        filled = 0;
      }
    }
  if (filled) push6(acc << (6 - filled));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  auto digit = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6: unexpected end of input", at);
    const unsigned char ch = static_cast<unsigned char>(text[at]);
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range", at);
    return ch - 63u;
  };
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = digit(pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | digit(pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | digit(pos++);
  }
  if (n > 100000) throw ParseError("graph6: order too large", pos);
  const std::uint64_t bits = n * (n ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  std::vector<Edge> es;
  std::uint64_t bit = 0, i = 0, j = 1;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const std::uint64_t x = digit(pos + b);
    for (int s = 5; s >= 0; --s, ++bit) {
      if (bit < bits) {
        if ((x >> s) & 1u) es.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if ((x >> s) & 1u) {
        throw ParseError("graph6: nonzero padding", pos + b);
      }
    }
  }
  pos += bytes;
  if (pos != text.size()) throw ParseError("graph6: trailing bytes", pos);
  return Graph(static_cast<std::size_t>(n), es);
}

}  // namespace fangood
