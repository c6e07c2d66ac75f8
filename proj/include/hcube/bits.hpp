#ifndef HCUBE_BITS_HPP
#define HCUBE_BITS_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace hcube {

/// Fixed-width 128-bit set over positions 1..128. Position 1 is the least
/// significant bit of word 0; callers never see the word layout.
class BitVec {
 public:
  static constexpr int kMaxBits = 128;

  constexpr BitVec() = default;

  bool test(int pos) const {
    return (w_[word(pos)] >> shift(pos)) & 1u;
  }
  void set(int pos) { w_[word(pos)] |= bit(pos); }
  void reset(int pos) { w_[word(pos)] &= ~bit(pos); }
  void flip(int pos) { w_[word(pos)] ^= bit(pos); }

  int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  /// Largest set position, 0 if the set is empty.
  int max_element() const {
    if (w_[1]) return 128 - std::countl_zero(w_[1]);
    if (w_[0]) return 64 - std::countl_zero(w_[0]);
    return 0;
  }

  /// Smallest set position strictly above `pos` (pass 0 to start), 0 if none.
  int next_element(int pos) const {
    for (int p = pos + 1; p <= kMaxBits; ++p) {
      int wi = word(p);
      std::uint64_t rest = w_[wi] >> shift(p);
      if (rest == 0) {
        p = (wi + 1) * 64;  // skip the remainder of this word
        continue;
      }
      return p + std::countr_zero(rest);
    }
    return 0;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a.w_[0] ^= b.w_[0];
    a.w_[1] ^= b.w_[1];
    return a;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }
  friend BitVec operator|(BitVec a, const BitVec& b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.w_[1] <=> b.w_[1]; c != 0) return c;
    return a.w_[0] <=> b.w_[0];
  }

  std::uint64_t hash() const {
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
    h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  std::uint64_t low_word() const { return w_[0]; }

 private:
  static constexpr int word(int pos) { return (pos - 1) >> 6; }
  static constexpr int shift(int pos) { return (pos - 1) & 63; }
  static constexpr std::uint64_t bit(int pos) { return 1ull << shift(pos); }

  std::array<std::uint64_t, 2> w_{0, 0};
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace hcube

#endif
