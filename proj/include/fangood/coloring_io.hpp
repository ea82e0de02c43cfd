#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "fangood/coloring.hpp"
#include "fangood/errors.hpp"

namespace fangood {

// RBC1: "RBC1 N=<N>\n" then the upper triangle row-major as hex, bit 1 = red,
// most significant bit first, zero padded.
inline std::string write_coloring(const TwoColoring& c) {
  static constexpr char kHex[] = "0123456789abcdef";
  const std::size_t n = c.order();
  std::string out = "RBC1 N=" + std::to_string(n) + "\n";
  unsigned acc = 0;
  int filled = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      acc = (acc << 1) | (c.is_red(u, v) ? 1u : 0u);
      if (++filled == 4) {
        out.push_back(kHex[acc]);
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(kHex[acc << (4 - filled)]);
  out.push_back('\n');
  return out;
}

inline TwoColoring read_coloring(std::string_view text) {
  constexpr std::string_view magic = "RBC1 N=";
  if (text.substr(0, magic.size()) != magic) throw FormatError("coloring: missing RBC1 header");
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw FormatError("coloring: missing payload line");
  std::string_view num = text.substr(magic.size(), eol - magic.size());
  if (!num.empty() && num.back() == '\r') num.remove_suffix(1);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
    throw FormatError("coloring: bad order in header");
  if (n > 200000) throw FormatError("coloring: order too large");
  std::string_view payload = text.substr(eol + 1);
  while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r'))
    payload.remove_suffix(1);
  const std::size_t bits = n * (n ? n - 1 : 0) / 2;
  const std::size_t digits = (bits + 3) / 4;
  if (payload.size() != digits)
    throw FormatError("coloring: payload has " + std::to_string(payload.size()) +
                      " hex digits, expected " + std::to_string(digits));
  TwoColoring c(n);
  std::size_t bit = 0;
  VertexId u = 0, v = 1;
  for (char ch : payload) {
    unsigned x;
    if (ch >= '0' && ch <= '9') x = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') x = static_cast<unsigned>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F') x = static_cast<unsigned>(ch - 'A' + 10);
    else throw FormatError("coloring: non-hex payload character");
    for (int s = 3; s >= 0; --s, ++bit) {
      const bool on = (x >> s) & 1u;
      if (bit >= bits) {
        if (on) throw FormatError("coloring: nonzero padding");
        continue;
      }
      if (on) c.set_red(u, v);
      if (++v == n) {
        ++u;
        v = u + 1;
      }
    }
  }
  return c;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  out << data;
}

inline TwoColoring load_coloring(const std::string& path) {
  return read_coloring(read_text_file(path));
}

inline void save_coloring(const std::string& path, const TwoColoring& c) {
  write_text_file(path, write_coloring(c));
}

}  // namespace fangood
