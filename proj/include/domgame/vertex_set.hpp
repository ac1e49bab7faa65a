#pragma once

#include <bit>
#include <cstdint>

namespace domgame {

// Every graph fits in one machine word per adjacency row.
inline constexpr int kBitsetCap = 64;

// Set of vertex ids in [0, kBitsetCap), backed by a single word.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t raw) : bits(raw) {}

  static constexpr VertexSet single(int v) {
    return VertexSet{std::uint64_t{1} << v};
  }

  // Mask of the n lowest vertex ids.
  static constexpr VertexSet first(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1};
  }

  constexpr bool test(int v) const { return (bits >> v) & 1; }
  constexpr VertexSet& set(int v) {
    bits |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& reset(int v) {
    bits &= ~(std::uint64_t{1} << v);
    return *this;
  }
  constexpr VertexSet with(int v) const {
    return VertexSet{bits | (std::uint64_t{1} << v)};
  }

  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool is_subset_of(VertexSet o) const {
    return (bits & ~o.bits) == 0;
  }
  // Lowest set vertex id; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet{a.bits | b.bits};
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet{a.bits & b.bits};
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet{a.bits & ~b.bits};
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits |= o.bits;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits &= o.bits;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  // Range over set bits in ascending order.
  struct iterator {
    std::uint64_t rest = 0;
    constexpr int operator*() const { return std::countr_zero(rest); }
    constexpr iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator, iterator) = default;
  };
  constexpr iterator begin() const { return {bits}; }
  constexpr iterator end() const { return {0}; }
};

}  // namespace domgame
