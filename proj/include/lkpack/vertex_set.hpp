#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace lkpack {

inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as one machine word.
///
/// Iteration visits members in increasing order. Comparison orders sets by
/// their numeric bit value, which is the canonical order used for witnesses.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// The set whose membership bits are `bits`.
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static constexpr VertexSet single(int v) { return from_bits(std::uint64_t{1} << v); }

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int v) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Next subset of the same cardinality in increasing numeric order (Gosper's hack).
/// Returns 0 once the subsets of a 64-bit universe are exhausted.
constexpr std::uint64_t next_same_size(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  if (ripple == 0) return 0;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

}  // namespace lkpack
