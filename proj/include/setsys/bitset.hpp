#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace setsys {

/// Runtime-sized bitset used for vertex sets in the search engines.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  /// Bits with index > i cleared.
  void keep_below(std::size_t i) {
    const std::size_t w = i >> 6;
    if (w >= words_.size()) return;
    words_[w] &= (std::uint64_t{1} << (i & 63)) - 1;
    for (std::size_t j = w + 1; j < words_.size(); ++j) words_[j] = 0;
  }
  /// Bits with index <= i cleared.
  void keep_above(std::size_t i) {
    const std::size_t w = i >> 6;
    for (std::size_t j = 0; j < w && j < words_.size(); ++j) words_[j] = 0;
    if (w < words_.size()) words_[w] &= ~((std::uint64_t{2} << (i & 63)) - 1);
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }
  /// Smallest set index > i, or npos.
  std::size_t next(std::size_t i) const {
    ++i;
    std::size_t w = i >> 6;
    if (w >= words_.size()) return npos;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= words_.size()) return npos;
      cur = words_[w];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w; w &= w - 1) fn((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
  }

  bool operator==(const Bitset&) const = default;

 private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }
  std::vector<std::uint64_t> words_;
  std::size_t nbits_ = 0;
};

}  // namespace setsys
