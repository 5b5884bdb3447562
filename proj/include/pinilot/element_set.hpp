#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "pinilot/simd/bitset_kernels.hpp"

namespace pinilot {

using Elem = std::uint16_t;

inline constexpr std::size_t kMaxOrderLimit = 512;

// Fixed-capacity bitset over element indices of one parent group.
class ElementSet {
public:
  static constexpr std::size_t kWords = kMaxOrderLimit / 64;

  ElementSet() = default;

  static ElementSet first_n(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~0ULL : ((1ULL << take) - 1);
      n -= take;
    }
    return s;
  }

  void insert(Elem e) { words_[e >> 6] |= 1ULL << (e & 63); }
  void erase(Elem e) { words_[e >> 6] &= ~(1ULL << (e & 63)); }
  bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1ULL; }

  std::size_t size() const {
    return simd::active_kernels().popcount(words_.data(), kWords);
  }
  bool empty() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  std::size_t intersection_size(const ElementSet &o) const {
    return simd::active_kernels().and_popcount(words_.data(), o.words_.data(),
                                               kWords);
  }
  bool is_subset_of(const ElementSet &o) const {
    return simd::active_kernels().is_subset(words_.data(), o.words_.data(),
                                            kWords);
  }
  bool intersects(const ElementSet &o) const {
    return simd::active_kernels().intersects(words_.data(), o.words_.data(),
                                             kWords);
  }

  ElementSet &operator&=(const ElementSet &o) {
    simd::active_kernels().and_into(words_.data(), o.words_.data(), kWords);
    return *this;
  }
  ElementSet &operator|=(const ElementSet &o) {
    simd::active_kernels().or_into(words_.data(), o.words_.data(), kWords);
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet &b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet &b) { return a |= b; }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;

  // Orders sets as their sorted element lists compare lexicographically.
  friend bool lex_less(const ElementSet &a, const ElementSet &b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (a.words_[w] & low) != 0;
      }
    }
    return false;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  const std::array<std::uint64_t, kWords> &words() const { return words_; }
  std::array<std::uint64_t, kWords> &words() { return words_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

private:
  alignas(32) std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const noexcept { return s.hash(); }
};

} // namespace pinilot
