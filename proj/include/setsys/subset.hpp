#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace setsys {

/// Largest ground set handled by the bit-vector representation.
inline constexpr int kMaxGround = 64;

/// A subset of [n] with n <= 64, one bit per element: element i is bit i-1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  /// Elements are 1-based; out-of-range elements are the caller's problem.
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }
  /// [1..n]
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1U; }
  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << (e - 1); }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << (e - 1)); }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest element, 0 when empty.
  constexpr int max_element() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;
  /// Orders by bit pattern.
  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// "{1,2,3}", "{}" for the empty set.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

inline int intersection_size(Subset a, Subset b) { return (a & b).size(); }

}  // namespace setsys
