#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fideal {

/// Largest ambient vertex count; a VertexSet is one machine word.
inline constexpr int kMaxVertices = 64;

/// A subset of {1, ..., n}. Vertex i is bit i-1, so a VertexSet doubles as
/// the support of a square-free monomial x_{i1} ... x_{ik}.
///
/// The ambient n is not stored here; ideals and complexes carry it and
/// validate membership when they are built.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// Builds a set from 1-based vertex labels. Throws std::out_of_range for
  /// a label outside 1..kMaxVertices.
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet of(const std::vector<int>& vertices);

  /// {1, ..., n}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr VertexSet singleton(int vertex) {
    return VertexSet(std::uint64_t{1} << (vertex - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int vertex) const {
    return (bits_ >> (vertex - 1)) & 1U;
  }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Largest member, 0 for the empty set.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }
  /// Smallest member, 0 for the empty set.
  constexpr int min_vertex() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  /// True iff every member lies in 1..n.
  constexpr bool within(int n) const { return is_subset_of(full(n)); }

  std::vector<int> vertices() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  /// Complement inside {1, ..., n}.
  constexpr VertexSet complement(int n) const { return full(n) - *this; }

  /// Calls fn(vertex) for each member in ascending order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      fn(std::countr_zero(b) + 1);
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order used for every stored list: smaller cardinality first,
/// then lexicographic on the ascending vertex lists ({1,2} < {1,3} < {2,3}).
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  const int ca = a.cardinality();
  const int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Equal sizes: the set owning the smallest differing vertex comes first.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    return canonical_less(a, b);
  }
};

/// "{1,2,4}"
std::string to_string(VertexSet set);

}  // namespace fideal

template <>
struct std::hash<fideal::VertexSet> {
  std::size_t operator()(fideal::VertexSet s) const noexcept {
    // splitmix64 finalizer
    std::uint64_t z = s.bits() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};
