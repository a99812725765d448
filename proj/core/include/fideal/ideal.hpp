#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fideal/vertex_set.hpp"

namespace fideal {

/// Malformed ideal source text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Removes duplicates and every set that contains another member, then sorts
/// canonically. Idempotent. Throws std::invalid_argument on an empty list.
std::vector<VertexSet> minimalize(std::span<const VertexSet> sets);

/// True iff no member contains another and there are no duplicates.
bool is_antichain(std::span<const VertexSet> sets);

/// A square-free monomial ideal of S = k[x_1, ..., x_n] given by its minimal
/// generators. Generator g encodes the monomial prod_{i in g} x_i.
///
/// Invariants checked on construction: 1 <= n <= 64; the generator list is
/// non-empty (no zero ideal); no generator is empty (no unit ideal); every
/// generator lies in [n]; generators form an antichain. Generators are kept
/// in canonical order.
class SquareFreeIdeal {
 public:
  /// Takes an arbitrary generating family. Throws std::invalid_argument if
  /// the family is not already a minimal antichain.
  SquareFreeIdeal(int n, std::vector<VertexSet> generators);

  /// Minimalizes the family first; only generators that are genuinely
  /// redundant are dropped.
  static SquareFreeIdeal from_generating_set(int n, std::vector<VertexSet> generators);

  int n() const { return n_; }
  std::span<const VertexSet> generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }

  /// m in I iff some generator divides m.
  bool contains_monomial(VertexSet monomial) const;

  bool operator==(const SquareFreeIdeal&) const = default;

 private:
  int n_;
  std::vector<VertexSet> generators_;
};

/// Union of generator supports.
VertexSet support(const SquareFreeIdeal& ideal);

/// Largest generator degree.
int degree(const SquareFreeIdeal& ideal);

/// Every generator has degree exactly d and the support is all of [n].
bool is_pure_of_degree(const SquareFreeIdeal& ideal, int d);

/// The d such that the ideal is pure of degree d, or 0.
int pure_degree(const SquareFreeIdeal& ideal);

enum class ParseMode {
  /// Reject duplicate or non-minimal generators.
  kStrict,
  /// Drop them and report a warning.
  kLenient,
};

/// Reads the ideal text format:
///
///     # comment
///     n=5
///     124 125 x3*x4*x5, 145; 235
///
/// `n=<int>` comes first; generator tokens are separated by whitespace,
/// commas or semicolons. A token is either a compact digit string (each
/// digit is a vertex; only valid when n <= 9) or explicit x-syntax
/// `x1*x2*x4` (any n).
///
/// Throws ParseError. Lenient-mode normalizations are appended to
/// `warnings` when it is non-null.
SquareFreeIdeal parse_ideal(std::string_view text, ParseMode mode = ParseMode::kStrict,
                            std::vector<std::string>* warnings = nullptr);

/// Canonical file rendering: "n=<n>\n" then the generators in explicit
/// syntax, canonical order, space separated, and a trailing newline.
std::string render_ideal(const SquareFreeIdeal& ideal);

/// Monomial in explicit syntax, e.g. "x1*x2*x4".
std::string monomial_string(VertexSet monomial);

/// "(x1x2x4, x1x2x5, ...)"
std::string to_string(const SquareFreeIdeal& ideal);

}  // namespace fideal
