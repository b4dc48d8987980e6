#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ggl {

using Vertex = int;
using Mask = std::uint32_t;

// Hard cap so every vertex subset fits a single machine word.
inline constexpr int kMaxVertices = 30;

// Subset of the vertices 0..n-1 with bit-mask semantics. Iteration yields
// vertices in ascending order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(Mask{1} << v); }
  static constexpr VertexSet full(int n) {
    return VertexSet(n == 0 ? Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int parity() const { return size() & 1; }

  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet s) const { return (bits_ & ~s.bits_) == 0; }
  constexpr bool intersects(VertexSet s) const { return (bits_ & s.bits_) != 0; }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (Mask{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(Mask{1} << v)); }
  constexpr VertexSet complement(int n) const { return VertexSet(full(n).bits_ & ~bits_); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet s) { bits_ |= s.bits_; return *this; }
  VertexSet& operator&=(VertexSet s) { bits_ &= s.bits_; return *this; }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  // Numeric order on the bit encoding; a strict superset always compares greater.
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

  class iterator {
   public:
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(iterator o) const { return rest_ != o.rest_; }
   private:
    Mask rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Mask bits_ = 0;
};

// Duplicate-free family of vertex sets over a common ambient vertex count,
// kept sorted by the numeric bit encoding so equality is structural.
using SetFamily = std::vector<VertexSet>;

inline void canonicalize(SetFamily& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

inline bool family_contains(const SetFamily& family, VertexSet s) {
  return std::binary_search(family.begin(), family.end(), s);
}

// Elementwise complements, re-canonicalized.
inline SetFamily complement_family(const SetFamily& family, int n) {
  SetFamily out;
  out.reserve(family.size());
  for (VertexSet s : family) out.push_back(s.complement(n));
  canonicalize(out);
  return out;
}

// Intersection of all members; the full set when the family is empty.
inline VertexSet family_intersection(const SetFamily& family, int n) {
  VertexSet acc = VertexSet::full(n);
  for (VertexSet s : family) acc &= s;
  return acc;
}

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

inline std::string to_string(const SetFamily& family) {
  std::string out = "{";
  bool first = true;
  for (VertexSet s : family) {
    if (!first) out += ", ";
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

}  // namespace ggl
