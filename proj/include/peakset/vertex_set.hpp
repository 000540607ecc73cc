#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "peakset/errors.hpp"

namespace peakset {

// A subset of the vertices {1, ..., n} of a graph with n <= 64, stored as a
// bitmask with vertex v occupying bit v-1.  Iteration visits vertices in
// ascending order.  Value type: cheap to copy, compare, and hash.
class VertexSet {
public:
  static constexpr int max_vertices = 64;

  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static VertexSet single(int v) {
    check_vertex(v);
    return VertexSet(std::uint64_t{1} << (v - 1));
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= max_vertices && (bits_ >> (v - 1)) & 1;
  }

  VertexSet with(int v) const {
    check_vertex(v);
    return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
  }

  VertexSet without(int v) const {
    check_vertex(v);
    return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  // Smallest vertex in the set, or 0 if empty.
  constexpr int first() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  // Largest vertex in the set, or 0 if empty.
  constexpr int last() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  // Orders sets by bitmask value; this is the canonical enumeration order for
  // collections keyed by vertex sets.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
  public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

  private:
    std::uint64_t rest_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  static void check_vertex(int v) {
    if (v < 1 || v > max_vertices)
      throw InputError("vertex " + std::to_string(v) + " out of range 1.." +
                       std::to_string(max_vertices));
  }

  std::uint64_t bits_ = 0;
};

// Renders a set as "{1,3,5}" for messages and reports.
inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace peakset
