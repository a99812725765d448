#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fideal/ideal.hpp"

namespace fideal {

/// All inclusion-minimal transversals of `family` (sets meeting every
/// member), canonically sorted. An empty family has the single transversal
/// {}; a family containing the empty set has none.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> family);

/// Minimal vertex covers of the generator hypergraph. For a square-free
/// monomial ideal these are exactly the minimal primes (x_i : i in C),
/// which are all of Ass(S/I).
std::vector<VertexSet> minimal_vertex_covers(const SquareFreeIdeal& ideal);

/// The monomial prime (x_i : i in variables).
struct PrimeComponent {
  VertexSet variables;

  int height() const { return variables.cardinality(); }
  bool contains_monomial(VertexSet monomial) const { return variables.intersects(monomial); }
  bool operator==(const PrimeComponent&) const = default;
};

struct Decomposition {
  std::vector<PrimeComponent> components;
  int height = 0;
  bool unmixed = false;
};

/// I = P_1 ∩ ... ∩ P_r over the minimal primes. The intersection identity
/// is checked on construction (see validate_decomposition) and a failure
/// throws std::logic_error.
Decomposition primary_decomposition(const SquareFreeIdeal& ideal);

/// Seed of the monomial sample used when n > 12.
inline constexpr std::uint64_t kDecompositionSampleSeed = 0x5eedf1dea1ULL;
inline constexpr int kDecompositionSampleSize = 10000;

/// Checks m ∈ I ⟺ m ∈ P for every component P over all square-free m when
/// n <= 12, and over kDecompositionSampleSize pseudo-random m otherwise.
bool validate_decomposition(const SquareFreeIdeal& ideal, const Decomposition& decomposition);

/// Minimum cardinality of a vertex cover.
int height(const SquareFreeIdeal& ideal);

/// All minimal vertex covers have the same cardinality.
bool is_unmixed(const SquareFreeIdeal& ideal);

/// Facets of the Stanley–Reisner complex read off the covers:
/// { [n] \ C : C a minimal vertex cover }, canonically sorted.
std::vector<VertexSet> nonface_facets_via_duality(const SquareFreeIdeal& ideal);

/// "(x1,x3) ∩ (x1,x5) ∩ (x2,x4)"
std::string to_string(const Decomposition& decomposition);

}  // namespace fideal
