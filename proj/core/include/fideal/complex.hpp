#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fideal/ideal.hpp"

namespace fideal {

/// A simplicial complex on the labels 1..n, stored by its facets.
///
/// The complex {∅}, whose only face is the empty face, is the empty facet
/// list; a facet list never contains ∅ itself. Vertices of [n] that lie in
/// no facet are simply not faces.
class SimplicialComplex {
 public:
  /// Throws std::invalid_argument unless facets is an antichain of non-empty
  /// subsets of [n].
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  /// The complex generated by arbitrary faces (keeps the maximal ones).
  static SimplicialComplex generated_by(int n, std::vector<VertexSet> faces);

  int n() const { return n_; }
  std::span<const VertexSet> facets() const { return facets_; }
  bool only_empty_face() const { return facets_.empty(); }
  /// max facet cardinality - 1; -1 for {∅}.
  int dimension() const;
  /// Union of facets.
  VertexSet vertex_set() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_;
  std::vector<VertexSet> facets_;
};

/// (f_0, ..., f_dim); f_{-1} = 1 is implicit. Equality compares dimension
/// and every count.
struct FVector {
  std::vector<std::uint64_t> counts;

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  /// f_i, or 0 outside 0..dim.
  std::uint64_t at(int i) const {
    return i >= 0 && i <= dim() ? counts[static_cast<std::size_t>(i)] : 0;
  }
  bool operator==(const FVector&) const = default;
};

/// δ_F(I): facets are the generators. Labels stay in [n]; the vertex set of
/// the result is supp(I).
SimplicialComplex facet_complex(const SquareFreeIdeal& ideal);

/// δ_N(I) on [n]: faces are the F with x_F ∉ I. Facets are obtained as
/// complements of the minimal vertex covers.
SimplicialComplex nonface_complex(const SquareFreeIdeal& ideal);

/// Facets of δ_N(I) by a direct scan of all 2^n subsets, keeping the
/// generator-free ones that cannot be extended. Independent of the cover
/// computation. Throws std::invalid_argument for n > 24.
std::vector<VertexSet> nonface_facets_by_search(const SquareFreeIdeal& ideal);

/// F lies in some facet. The empty face is in every complex.
bool is_face(const SimplicialComplex& complex, VertexSet face);

/// Face counts by inclusion–exclusion over facet intersections:
/// |U_1 ∪ ... ∪ U_k| = |U_1 ∪ ... ∪ U_{k-1}| + |U_k| - |⋃_{i<k} (U_i ∩ U_k)|
/// with U_i the non-empty subsets of facet i. Intersections that are empty
/// or contained in another are dropped before recursing. Exact; throws
/// OverflowError if a count exceeds 64 bits.
FVector f_vector(const SimplicialComplex& complex);

/// Face counts by testing every subset of [n]. Throws std::invalid_argument
/// for n > 24.
FVector f_vector_bruteforce(const SimplicialComplex& complex);

/// I_F(Δ): generators are the facets. Throws std::invalid_argument for {∅}.
SquareFreeIdeal facet_ideal(const SimplicialComplex& complex);

/// I_N(Δ): generated by the minimal non-faces. Throws std::invalid_argument
/// for the full simplex on [n], which has no non-faces.
SquareFreeIdeal nonface_ideal(const SimplicialComplex& complex);

/// numerator(t) / (1 - t)^denominator_power, always over (1 - t)^n.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  int denominator_power = 0;
  int n = 0;

  /// Coefficient of t^j in the power-series expansion (the Hilbert
  /// function of S/I at degree j).
  std::uint64_t coefficient(int j) const;
  /// Coefficients for t^0 .. t^max_degree.
  std::vector<std::uint64_t> expand(int max_degree) const;
};

/// H(t) = Σ_{i=-1}^{dim} f_i t^{i+1} / (1 - t)^{i+1} with f_{-1} = 1,
/// brought over (1 - t)^n. `fv` is the f-vector of δ_N(I) for an ideal on n
/// variables. Throws std::invalid_argument when an entry exceeds C(n, i+1).
HilbertSeries hilbert_series(const FVector& fv, int n);

/// "<{1,2,4}, {1,2,5}>"; {∅} renders as "<{}>".
std::string to_string(const SimplicialComplex& complex);
/// "(6, 15, 10)"; the empty vector renders as "()".
std::string to_string(const FVector& fv);
/// "(1 - 6*t + 15*t^2) / (1-t)^6"
std::string to_string(const HilbertSeries& series);

}  // namespace fideal
