#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fideal/binomial.hpp"
#include "fideal/ideal.hpp"

namespace fideal {

inline constexpr int kMaxEnumerationVertices = 8;
/// Limit on C(C(n,d), C(n,d)/2) without `force`.
inline constexpr std::uint64_t kCensusCandidateLimit = 1'000'000'000;

/// Bit r selects the r-th degree-d monomial of the ranked list.
using CandidateMask = UInt128;

/// The C(n, d) degree-d square-free monomials on [n], ranked in canonical
/// order, with per-vertex masks for the full-support filter.
class CandidateSpace {
 public:
  /// Throws std::invalid_argument unless 2 <= d <= n <= 8.
  CandidateSpace(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  VertexSet monomial(int rank) const { return monomials_[static_cast<std::size_t>(rank)]; }
  int rank_of(VertexSet monomial) const;

  bool has_full_support(CandidateMask mask) const {
    for (CandidateMask m : touching_) {
      if ((mask & m) == 0) return false;
    }
    return true;
  }
  /// The ideal generated by the selected monomials (mask non-zero).
  SquareFreeIdeal ideal(CandidateMask mask) const;
  /// Inverse of ideal(); throws std::invalid_argument for a generator that
  /// is not a degree-d subset of [n].
  CandidateMask mask_of(const SquareFreeIdeal& ideal) const;

 private:
  int n_;
  int d_;
  std::vector<VertexSet> monomials_;
  std::vector<CandidateMask> touching_;
};

/// Next mask with the same popcount (Gosper's hack). The caller stops once
/// the result passes the top of its range.
constexpr CandidateMask next_same_popcount(CandidateMask x) {
  const CandidateMask lowest = x & (~x + 1);
  const CandidateMask ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

/// Lazily yields every full-support s-subset of the degree-d monomials in
/// increasing mask order (colex over the characteristic vector).
class CandidateStream {
 public:
  CandidateStream(int n, int d, int s);

  std::optional<SquareFreeIdeal> next();
  const CandidateSpace& space() const { return space_; }

 private:
  CandidateSpace space_;
  CandidateMask current_;
  CandidateMask end_;
  bool done_ = false;
};

/// Throws std::invalid_argument unless 2 <= d <= n <= 8 and 1 <= s <= C(n,d).
CandidateStream enumerate_candidates(int n, int d, int s);

struct CensusOptions {
  int workers = 1;
  /// Number of f-ideals kept in CensusEntry::representatives.
  int representatives = 5;
  /// Keep every f-ideal and every necessary-but-not-f witness.
  bool collect_all = false;
  /// Canonical representative per S_n-orbit of f-ideals (n <= 6).
  bool orbits = false;
  /// Ignore kCensusCandidateLimit.
  bool force = false;
};

struct CensusEntry {
  int n = 0;
  int d = 0;
  /// C(n, d) / 2, or 0 when parity-pruned.
  int s = 0;
  std::uint64_t binom = 0;
  bool parity_pruned = false;
  /// s-subsets iterated.
  std::uint64_t candidates_scanned = 0;
  /// Of those, with support [n].
  std::uint64_t full_support = 0;
  std::uint64_t f_ideals_direct = 0;
  std::uint64_t f_ideals_characterization = 0;
  std::uint64_t disagreements = 0;
  /// Candidates passing necessary conditions (1)-(3).
  std::uint64_t necessary_pass = 0;
  /// f-ideals failing a necessary condition.
  std::uint64_t necessity_violations = 0;
  /// Passing necessary conditions yet not f-ideals.
  std::uint64_t non_sufficiency_witnesses = 0;
  std::chrono::milliseconds elapsed{0};

  /// First `representatives` f-ideals in candidate order.
  std::vector<SquareFreeIdeal> representatives;
  /// Filled with collect_all.
  std::vector<SquareFreeIdeal> all_f_ideals;
  std::vector<SquareFreeIdeal> all_witnesses;
  std::vector<SquareFreeIdeal> disagreement_examples;
  /// Filled with orbits.
  std::vector<SquareFreeIdeal> orbit_representatives;
};

/// Scans every s = C(n,d)/2 candidate with both predicates. Odd C(n,d)
/// returns zero counts without scanning. Counts and lists are identical for
/// every worker count.
CensusEntry census(int n, int d, const CensusOptions& options = {});

/// The relabeling of `ideal` with the least candidate mask.
SquareFreeIdeal canonical_relabeling(const CandidateSpace& space, const SquareFreeIdeal& ideal);

struct SuiteOptions {
  CensusOptions census;
  /// Random full-support candidates with s != C(n,d)/2 per pair when the
  /// all-s sweep is too large.
  int off_count_samples = 2000;
  std::uint64_t seed = 20240601;
  /// All 2^C(n,d) - 1 subsets are swept when C(n,d) <= this.
  int sweep_limit = 16;
};

struct PairReport {
  CensusEntry census;
  bool swept_all_sizes = false;
  /// Subsets of every size (sweep) or sampled off-count candidates.
  std::uint64_t off_scanned = 0;
  std::uint64_t off_pure = 0;
  std::uint64_t off_f_ideals_direct = 0;
  std::uint64_t off_f_ideals_characterization = 0;
  std::uint64_t off_disagreements = 0;
  /// Sweep only: f-ideals among the non-pure subsets.
  std::uint64_t nonpure_f_ideals = 0;
  /// f-ideals found with s != C(n,d)/2.
  std::uint64_t off_count_f_ideals = 0;

  /// The sweep already contains every census candidate.
  std::uint64_t disagreements() const {
    return swept_all_sizes ? off_disagreements : census.disagreements + off_disagreements;
  }
};

struct SuiteReport {
  std::vector<PairReport> pairs;
  std::uint64_t total_disagreements() const;
  std::uint64_t total_off_count_f_ideals() const;
};

SuiteReport equivalence_suite(std::span<const std::pair<int, int>> pairs,
                              const SuiteOptions& options = {});

}  // namespace fideal
