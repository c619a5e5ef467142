#pragma once

#include <bit>
#include <cstdint>

namespace tdgame {

using Vertex = int;

// Dense bit-indexed set of vertices 0..63. Membership, union, difference,
// complement and popcount are single word operations.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet universe(int n) {
    return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(1ULL << v); }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1ULL; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr Vertex lowest() const { return std::countr_zero(bits_); }

  void insert(Vertex v) { bits_ |= 1ULL << v; }
  void erase(Vertex v) { bits_ &= ~(1ULL << v); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr VertexSet complement_in(int n) const {
    return VertexSet(universe(n).bits_ & ~bits_);
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Iterates set members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace tdgame
