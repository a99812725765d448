#include "fideal/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "fideal/analysis.hpp"

namespace fideal {

namespace {

constexpr CandidateMask bit(int i) { return CandidateMask{1} << i; }
constexpr CandidateMask low_bits(int k) { return k <= 0 ? 0 : bit(k) - 1; }

void check_bounds(int n, int d) {
  if (n < 2 || n > kMaxEnumerationVertices || d < 2 || d > n) {
    throw std::invalid_argument("enumeration needs 2 <= d <= n <= 8, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  }
}

// Relabels candidate masks under every vertex permutation.
class OrbitCanonicalizer {
 public:
  explicit OrbitCanonicalizer(const CandidateSpace& space) {
    std::vector<int> perm(static_cast<std::size_t>(space.n()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<std::uint8_t> table;
      for (int r = 0; r < space.size(); ++r) {
        VertexSet image;
        space.monomial(r).for_each([&](int v) {
          image |= VertexSet::singleton(perm[static_cast<std::size_t>(v - 1)]);
        });
        table.push_back(static_cast<std::uint8_t>(space.rank_of(image)));
      }
      tables_.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  CandidateMask canonical(CandidateMask mask) const {
    CandidateMask best = mask;
    for (const auto& table : tables_) {
      CandidateMask image = 0;
      for (CandidateMask m = mask; m != 0; m &= m - 1) {
        image |= bit(table[static_cast<std::size_t>(trailing_zeros(m))]);
      }
      best = std::min(best, image);
    }
    return best;
  }

 private:
  static int trailing_zeros(CandidateMask m) {
    const auto lo = static_cast<std::uint64_t>(m);
    return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
  }

  std::vector<std::vector<std::uint8_t>> tables_;
};

// A contiguous block of masks sharing their top one or two bits.
struct WorkUnit {
  CandidateMask first;
  int fixed_from;  // bits at and above this position are fixed
};

std::vector<WorkUnit> partition(int size, int s) {
  std::vector<WorkUnit> units;
  if (s == 1) {
    for (int h = 0; h < size; ++h) units.push_back({bit(h), h});
    return units;
  }
  for (int h = s - 1; h < size; ++h) {
    for (int h2 = s - 2; h2 < h; ++h2) {
      units.push_back({bit(h) | bit(h2) | low_bits(s - 2), h2});
    }
  }
  return units;
}

struct UnitResult {
  std::uint64_t scanned = 0;
  std::uint64_t full_support = 0;
  std::uint64_t direct = 0;
  std::uint64_t characterization = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t necessary = 0;
  std::uint64_t necessity_violations = 0;
  std::uint64_t witnesses = 0;
  std::vector<CandidateMask> f_ideals;
  std::vector<CandidateMask> witness_masks;
  std::vector<CandidateMask> disagreement_masks;
};

UnitResult scan_unit(const CandidateSpace& space, const WorkUnit& unit, std::size_t keep,
                     bool keep_witnesses) {
  UnitResult out;
  const CandidateMask prefix = unit.first >> unit.fixed_from;
  for (CandidateMask mask = unit.first; (mask >> unit.fixed_from) == prefix;
       mask = next_same_popcount(mask)) {
    ++out.scanned;
    if (!space.has_full_support(mask)) continue;
    ++out.full_support;
    const ConditionReport report = check_characterization(space.ideal(mask));
    const bool direct = report.direct_verdict;
    const bool characterized = *report.characterization_verdict;
    const bool necessary = report.necessary_conditions_pass();
    out.direct += direct;
    out.characterization += characterized;
    out.necessary += necessary;
    if (direct != characterized) {
      ++out.disagreements;
      if (out.disagreement_masks.size() < 16) out.disagreement_masks.push_back(mask);
    }
    if (direct && !necessary) ++out.necessity_violations;
    if (necessary && !direct) {
      ++out.witnesses;
      if (keep_witnesses) out.witness_masks.push_back(mask);
    }
    if (direct && out.f_ideals.size() < keep) out.f_ideals.push_back(mask);
  }
  return out;
}

void check_census_size(int size, int s, bool force) {
  if (force) return;
  const UInt128 total = binomial128(size, s);
  if (total > kCensusCandidateLimit) {
    throw std::invalid_argument("census: C(" + std::to_string(size) + ", " + std::to_string(s) +
                                ") candidates exceed 10^9; pass force to run anyway");
  }
}

std::vector<SquareFreeIdeal> to_ideals(const CandidateSpace& space,
                                       const std::vector<CandidateMask>& masks) {
  std::vector<SquareFreeIdeal> out;
  out.reserve(masks.size());
  for (CandidateMask m : masks) out.push_back(space.ideal(m));
  return out;
}

}  // namespace

CandidateSpace::CandidateSpace(int n, int d) : n_(n), d_(d) {
  check_bounds(n, d);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) == d) monomials_.emplace_back(m);
  }
  std::sort(monomials_.begin(), monomials_.end(), canonical_less);
  touching_.assign(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < size(); ++r) {
    monomials_[static_cast<std::size_t>(r)].for_each(
        [&](int v) { touching_[static_cast<std::size_t>(v - 1)] |= bit(r); });
  }
}

int CandidateSpace::rank_of(VertexSet monomial) const {
  const auto it = std::lower_bound(monomials_.begin(), monomials_.end(), monomial, canonical_less);
  if (it == monomials_.end() || *it != monomial) {
    throw std::invalid_argument("monomial " + to_string(monomial) + " is not a degree-" +
                                std::to_string(d_) + " subset of [" + std::to_string(n_) + "]");
  }
  return static_cast<int>(it - monomials_.begin());
}

SquareFreeIdeal CandidateSpace::ideal(CandidateMask mask) const {
  std::vector<VertexSet> generators;
  for (int r = 0; r < size(); ++r) {
    if ((mask >> r) & 1) generators.push_back(monomials_[static_cast<std::size_t>(r)]);
  }
  // Ranked order is canonical, and equal-degree sets form an antichain.
  return SquareFreeIdeal(n_, std::move(generators));
}

CandidateMask CandidateSpace::mask_of(const SquareFreeIdeal& ideal) const {
  if (ideal.n() != n_) throw std::invalid_argument("mask_of: ideal lives on a different n");
  CandidateMask mask = 0;
  for (VertexSet g : ideal.generators()) mask |= bit(rank_of(g));
  return mask;
}

CandidateStream::CandidateStream(int n, int d, int s) : space_(n, d) {
  if (s < 1 || s > space_.size()) {
    throw std::invalid_argument("enumerate_candidates: s must lie in 1.." +
                                std::to_string(space_.size()));
  }
  current_ = low_bits(s);
  end_ = bit(space_.size());
}

std::optional<SquareFreeIdeal> CandidateStream::next() {
  while (!done_ && current_ < end_) {
    const CandidateMask mask = current_;
    current_ = next_same_popcount(current_);
    if (space_.has_full_support(mask)) return space_.ideal(mask);
  }
  done_ = true;
  return std::nullopt;
}

CandidateStream enumerate_candidates(int n, int d, int s) { return CandidateStream(n, d, s); }

SquareFreeIdeal canonical_relabeling(const CandidateSpace& space, const SquareFreeIdeal& ideal) {
  return space.ideal(OrbitCanonicalizer(space).canonical(space.mask_of(ideal)));
}

CensusEntry census(int n, int d, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.orbits && n > 6) throw std::invalid_argument("census: orbit reduction needs n <= 6");
  const CandidateSpace space(n, d);
  CensusEntry entry;
  entry.n = n;
  entry.d = d;
  entry.binom = static_cast<std::uint64_t>(space.size());
  if (space.size() % 2 != 0) {
    // Condition (2): an odd C(n, d) admits no f-ideal.
    entry.parity_pruned = true;
    return entry;
  }
  const int s = space.size() / 2;
  entry.s = s;
  check_census_size(space.size(), s, options.force);

  const std::vector<WorkUnit> units = partition(space.size(), s);
  std::vector<UnitResult> results(units.size());
  const bool keep_everything = options.collect_all || options.orbits;
  const std::size_t keep = keep_everything ? SIZE_MAX
                                           : static_cast<std::size_t>(std::max(0, options.representatives));

  std::atomic<std::size_t> next_unit{0};
  const auto worker = [&] {
    for (std::size_t u = next_unit++; u < units.size(); u = next_unit++) {
      results[u] = scan_unit(space, units[u], keep, options.collect_all);
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<CandidateMask> f_masks;
  std::vector<CandidateMask> witness_masks;
  for (const UnitResult& r : results) {
    entry.candidates_scanned += r.scanned;
    entry.full_support += r.full_support;
    entry.f_ideals_direct += r.direct;
    entry.f_ideals_characterization += r.characterization;
    entry.disagreements += r.disagreements;
    entry.necessary_pass += r.necessary;
    entry.necessity_violations += r.necessity_violations;
    entry.non_sufficiency_witnesses += r.witnesses;
    f_masks.insert(f_masks.end(), r.f_ideals.begin(), r.f_ideals.end());
    witness_masks.insert(witness_masks.end(), r.witness_masks.begin(), r.witness_masks.end());
    for (CandidateMask m : r.disagreement_masks) {
      if (entry.disagreement_examples.size() < 16) entry.disagreement_examples.push_back(space.ideal(m));
    }
  }

  const std::size_t reps = std::min(f_masks.size(), static_cast<std::size_t>(std::max(0, options.representatives)));
  entry.representatives = to_ideals(space, {f_masks.begin(), f_masks.begin() + static_cast<std::ptrdiff_t>(reps)});
  if (options.collect_all) {
    entry.all_f_ideals = to_ideals(space, f_masks);
    entry.all_witnesses = to_ideals(space, witness_masks);
  }
  if (options.orbits) {
    const OrbitCanonicalizer canon(space);
    std::set<CandidateMask> classes;
    for (CandidateMask m : f_masks) classes.insert(canon.canonical(m));
    entry.orbit_representatives = to_ideals(space, {classes.begin(), classes.end()});
  }
  entry.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return entry;
}

namespace {

void tally_off_count(const CandidateSpace& space, CandidateMask mask, PairReport& report) {
  const SquareFreeIdeal ideal = space.ideal(mask);
  ++report.off_scanned;
  const bool off_count = ideal.generator_count() * 2 != space.size();
  if (!space.has_full_support(mask)) {
    if (is_f_ideal(ideal)) {
      ++report.nonpure_f_ideals;
      if (off_count) ++report.off_count_f_ideals;
    }
    return;
  }
  ++report.off_pure;
  const ConditionReport r = check_characterization(ideal);
  report.off_f_ideals_direct += r.direct_verdict;
  report.off_f_ideals_characterization += *r.characterization_verdict;
  if (r.theorem_violation()) ++report.off_disagreements;
  if (r.direct_verdict && off_count) ++report.off_count_f_ideals;
}

}  // namespace

SuiteReport equivalence_suite(std::span<const std::pair<int, int>> pairs, const SuiteOptions& options) {
  SuiteReport suite;
  for (const auto& [n, d] : pairs) {
    PairReport report;
    report.census = census(n, d, options.census);
    const CandidateSpace space(n, d);
    const int size = space.size();

    if (size <= options.sweep_limit) {
      report.swept_all_sizes = true;
      for (CandidateMask mask = 1; mask < bit(size); ++mask) tally_off_count(space, mask, report);
    } else {
      // Off-count sampling; the smallest s with full support is ceil(n/d).
      std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                          static_cast<std::uint64_t>(d));
      const int s_min = (n + d - 1) / d;
      std::vector<int> ranks(static_cast<std::size_t>(size));
      int accepted = 0;
      for (long attempt = 0; accepted < options.off_count_samples &&
                             attempt < 100L * options.off_count_samples;
           ++attempt) {
        const int s = s_min + static_cast<int>(rng() % static_cast<std::uint64_t>(size - s_min + 1));
        if (size % 2 == 0 && s == size / 2) continue;
        std::iota(ranks.begin(), ranks.end(), 0);
        CandidateMask mask = 0;
        for (int i = 0; i < s; ++i) {
          const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(size - i));
          std::swap(ranks[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(j)]);
          mask |= bit(ranks[static_cast<std::size_t>(i)]);
        }
        if (!space.has_full_support(mask)) continue;
        tally_off_count(space, mask, report);
        ++accepted;
      }
    }
    suite.pairs.push_back(std::move(report));
  }
  return suite;
}

std::uint64_t SuiteReport::total_disagreements() const {
  std::uint64_t total = 0;
  for (const PairReport& p : pairs) total += p.disagreements();
  return total;
}

std::uint64_t SuiteReport::total_off_count_f_ideals() const {
  std::uint64_t total = 0;
  for (const PairReport& p : pairs) total += p.off_count_f_ideals;
  return total;
}

}  // namespace fideal
