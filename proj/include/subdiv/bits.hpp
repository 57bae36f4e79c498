#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace subdiv {

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

inline constexpr Mask low_bits(int count) noexcept {
  return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

inline int popcount(Mask m) noexcept { return std::popcount(m); }

/// Calls fn(v) for every set bit v of m, lowest first.
template <typename Fn> inline void for_each_bit(Mask m, Fn &&fn) {
  while (m != 0) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    fn(v);
  }
}

inline std::vector<int> bits_to_vector(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

/// Fixed-width bitset sized at runtime. Used for adjacency rows of hosts with
/// more than 64 vertices; everything on small hosts goes through Mask.
class VertexBits {
public:
  VertexBits() = default;
  explicit VertexBits(int n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  void set(int v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v & 63); }
  void reset(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v & 63); }
  bool test(int v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }

  VertexBits &operator&=(const VertexBits &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexBits &operator|=(const VertexBits &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  VertexBits &subtract(const VertexBits &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  int count() const {
    int c = 0;
    for (Mask w : words_) c += popcount(w);
    return c;
  }
  bool none() const {
    for (Mask w : words_)
      if (w != 0) return false;
    return true;
  }

  template <typename Fn> void for_each(Fn &&fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const int base = static_cast<int>(i * 64);
      for_each_bit(words_[i], [&](int b) { fn(base + b); });
    }
  }

  /// Low 64 bits; exact when the bitset is at most 64 wide.
  Mask first_word() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const VertexBits &, const VertexBits &) = default;

private:
  std::vector<Mask> words_;
};

} // namespace subdiv
