#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace fangood {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Fixed-universe bitset over dense vertex ids.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  static VertexSet of(std::size_t universe, std::span<const VertexId> vs) {
    VertexSet s(universe);
    for (VertexId v : vs) s.set(v);
    return s;
  }
  static VertexSet of(std::size_t universe, std::initializer_list<VertexId> vs) {
    return of(universe, std::span<const VertexId>(vs.begin(), vs.size()));
  }
  // {lo, ..., hi-1}
  static VertexSet range(std::size_t universe, VertexId lo, VertexId hi) {
    VertexSet s(universe);
    for (VertexId v = lo; v < hi; ++v) s.set(v);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(VertexId v) const noexcept {
    return (words_[v / kBits] >> (v % kBits)) & 1u;
  }
  void set(VertexId v) noexcept { words_[v / kBits] |= Word{1} << (v % kBits); }
  void reset(VertexId v) noexcept { words_[v / kBits] &= ~(Word{1} << (v % kBits)); }
  void assign(VertexId v, bool on) noexcept { on ? set(v) : reset(v); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  VertexId first() const noexcept { return next_from(0); }
  // Smallest element >= v, or kNoVertex.
  VertexId next_from(std::size_t v) const noexcept {
    if (v >= universe_) return kNoVertex;
    std::size_t i = v / kBits;
    Word w = words_[i] & (~Word{0} << (v % kBits));
    while (true) {
      if (w) return static_cast<VertexId>(i * kBits + std::countr_zero(w));
      if (++i == words_.size()) return kNoVertex;
      w = words_[i];
    }
  }
  VertexId after(VertexId v) const noexcept { return next_from(std::size_t{v} + 1); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(static_cast<VertexId>(i * kBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }
  // The first `limit` elements in ascending order.
  std::vector<VertexId> first_n(std::size_t limit) const {
    std::vector<VertexId> out;
    for (VertexId v = first(); v != kNoVertex && out.size() < limit; v = after(v))
      out.push_back(v);
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  std::size_t intersection_count(const VertexSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  // this \ o is nonempty
  bool any_outside(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet&) const = default;

  std::span<const Word> words() const noexcept { return words_; }

 private:
  void trim() noexcept {
    if (universe_ % kBits && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace fangood
