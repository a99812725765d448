// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failing criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fideal/analysis.hpp"
#include "fideal/binomial.hpp"
#include "fideal/complex.hpp"
#include "fideal/decomposition.hpp"
#include "fideal/enumeration.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace fideal;
using Clock = std::chrono::steady_clock;

// Random corpus for criteria 8 and 9.
constexpr std::uint64_t kCorpusSeed = 0xace7'2024;
constexpr int kCorpusSize = 1000;
constexpr int kCorpusMaxN = 12;

VertexSet vs(std::initializer_list<int> v) { return VertexSet::of(v); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& v) {
    s_ << v;
    return *this;
  }
  std::string str() const { return s_.str(); }

 private:
  std::ostringstream s_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::vector<SquareFreeIdeal> corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<SquareFreeIdeal> out;
  out.reserve(kCorpusSize);
  for (int i = 0; i < kCorpusSize; ++i) {
    if (i % 2 == 0) {
      out.push_back(oracle::random_ideal(rng, kCorpusMaxN, 12));
    } else {
      const int n = std::uniform_int_distribution<int>(2, kCorpusMaxN)(rng);
      const int d = std::uniform_int_distribution<int>(1, std::min(n, 6))(rng);
      out.push_back(oracle::random_full_support_ideal(rng, n, d, 8));
    }
  }
  return out;
}

Outcome criterion1() {
  const auto start = Clock::now();
  const SquareFreeIdeal i = testing::degree3_example();
  const ConditionReport r = analyze(i);
  const double t = seconds_since(start);
  const FVector expected{{6, 15, 10}};
  Detail d;
  d << "f(facet)=" << to_string(r.f_facet) << " f(nonface)=" << to_string(r.f_nonface)
    << " f-ideal=" << (r.f_ideal() ? "true" : "false") << " time=" << t << "s (< 1s)";
  return {r.f_facet == expected && r.f_nonface == expected && r.f_ideal() && t < 1.0, d.str()};
}

Outcome criterion2() {
  const auto start = Clock::now();
  const Decomposition dec = primary_decomposition(testing::degree3_example());
  const double t = seconds_since(start);
  const std::vector<VertexSet> listed{vs({1, 2, 3}), vs({1, 2, 5}), vs({1, 3, 4}), vs({1, 3, 6}),
                                      vs({1, 4, 6}), vs({2, 3, 5}), vs({2, 4, 5}), vs({2, 4, 6}),
                                      vs({3, 4, 5}), vs({3, 5, 6})};
  std::vector<VertexSet> got;
  bool heights = true;
  for (const auto& p : dec.components) {
    got.push_back(p.variables);
    heights = heights && p.height() == 3;
  }
  Detail d;
  d << dec.components.size() << " components, all height 3=" << (heights ? "yes" : "no")
    << ", unmixed=" << (dec.unmixed ? "true" : "false")
    << ", primes match=" << (got == listed ? "yes" : "no") << " time=" << t << "s (< 1s)";
  return {dec.components.size() == 10 && heights && dec.unmixed && got == listed && t < 1.0, d.str()};
}

Outcome criterion3() {
  const SquareFreeIdeal i = testing::nonexample_5var();
  const ConditionReport r = check_characterization(i);
  const bool conditions = r.height->pass && r.height->observed == 2 && r.parity_count->pass &&
                          r.parity_count->binom == 10 && r.parity_count->generators == 5 &&
                          r.parity_count->associated_primes == 5;
  const bool fvs = r.f_facet == FVector{{5, 9, 5}} && r.f_nonface == FVector{{5, 10, 5}};
  const bool not_f = !is_f_ideal(i);
  Detail d;
  d << "height=" << r.height->observed << " C(5,3)=" << r.parity_count->binom
    << " s=" << r.parity_count->generators << " |Ass|=" << r.parity_count->associated_primes
    << " f(facet)=" << to_string(r.f_facet) << " f(nonface)=" << to_string(r.f_nonface)
    << " f-ideal=" << (not_f ? "false" : "true");
  return {conditions && fvs && not_f, d.str()};
}

Outcome criterion4() {
  const Decomposition dec = primary_decomposition(testing::nonexample_5var());
  const std::vector<VertexSet> listed{vs({1, 3}), vs({1, 5}), vs({2, 4}), vs({2, 5}), vs({4, 5})};
  std::vector<VertexSet> got;
  for (const auto& p : dec.components) got.push_back(p.variables);
  return {got == listed, to_string(dec)};
}

Outcome criterion5() {
  const auto start = Clock::now();
  const std::vector<std::pair<int, int>> pairs{{4, 2}, {5, 3}};
  const SuiteReport suite = equivalence_suite(pairs, {});
  const double t = seconds_since(start);
  const PairReport& a = suite.pairs[0];
  const PairReport& b = suite.pairs[1];
  const bool shape = a.census.candidates_scanned == 20 && a.swept_all_sizes &&
                     a.off_scanned == 63 && b.census.candidates_scanned == 252;
  Detail d;
  d << "(4,2): " << a.census.candidates_scanned << " 3-subsets + " << a.off_scanned
    << " subsets of all sizes, disagreements=" << a.disagreements() << "; (5,3): "
    << b.census.candidates_scanned << " 5-subsets, disagreements=" << b.census.disagreements
    << " (direct " << b.census.f_ideals_direct << " vs characterization "
    << b.census.f_ideals_characterization << "); time=" << t << "s (< 5s)";
  return {shape && a.disagreements() == 0 && b.census.disagreements == 0 && t < 5.0, d.str()};
}

Outcome criterion6() {
  const auto start = Clock::now();
  const CensusEntry one = census(6, 3, {.workers = 1, .collect_all = true});
  const double t = seconds_since(start);
  const CensusEntry many = census(6, 3, {.workers = 4});
  const SquareFreeIdeal example = testing::degree3_example();
  const bool found =
      std::find(one.all_f_ideals.begin(), one.all_f_ideals.end(), example) != one.all_f_ideals.end();
  const bool deterministic = one.f_ideals_direct == many.f_ideals_direct &&
                             one.f_ideals_characterization == many.f_ideals_characterization &&
                             one.disagreements == many.disagreements;
  Detail d;
  d << "scanned=" << one.candidates_scanned << " direct=" << one.f_ideals_direct
    << " characterization=" << one.f_ideals_characterization
    << " disagreements=" << one.disagreements << " example found=" << (found ? "yes" : "no")
    << " deterministic(1 vs 4 workers)=" << (deterministic ? "yes" : "no") << " time=" << t
    << "s (< 60s)";
  return {one.candidates_scanned == 184756 && one.disagreements == 0 && found && deterministic &&
              t < 60.0,
          d.str()};
}

Outcome criterion7() {
  const CensusEntry c62 = census(6, 2);
  const std::vector<std::pair<int, int>> pairs{{5, 2}};
  const SuiteReport suite = equivalence_suite(pairs, {});
  const PairReport& p = suite.pairs[0];
  Detail d;
  d << "census(6,2): parity_pruned=" << (c62.parity_pruned ? "true" : "false")
    << " f-ideals=" << c62.f_ideals_direct << "; (5,2) all-size sweep of " << p.off_scanned
    << " subsets: f-ideals with s!=5: " << p.off_count_f_ideals
    << ", non-pure f-ideals: " << p.nonpure_f_ideals;
  return {c62.parity_pruned && c62.f_ideals_direct == 0 && c62.candidates_scanned == 0 &&
              p.swept_all_sizes && p.off_count_f_ideals == 0,
          d.str()};
}

Outcome criterion8(const std::vector<SquareFreeIdeal>& ideals) {
  int fv = 0;
  int covers = 0;
  int duality = 0;
  int round_trip = 0;
  for (const SquareFreeIdeal& i : ideals) {
    const SimplicialComplex f = facet_complex(i);
    const SimplicialComplex n = nonface_complex(i);
    if (f_vector(f) != f_vector_bruteforce(f) || f_vector(n) != f_vector_bruteforce(n)) ++fv;
    if (minimal_vertex_covers(i) != oracle::subset_scan_covers(i)) ++covers;
    auto dual = nonface_facets_via_duality(i);
    if (dual.size() == 1 && dual[0].empty()) dual.clear();
    if (dual != std::vector<VertexSet>(n.facets().begin(), n.facets().end())) ++duality;
    if (nonface_ideal(n) != i) ++round_trip;
  }
  Detail d;
  d << ideals.size() << " ideals (seed 0x" << std::hex << kCorpusSeed << std::dec
    << ", n <= " << kCorpusMaxN << "): failures f_vector=" << fv << " covers=" << covers
    << " duality=" << duality << " round-trip=" << round_trip;
  return {fv + covers + duality + round_trip == 0, d.str()};
}

Outcome criterion9(const std::vector<SquareFreeIdeal>& ideals) {
  int pure = 0;
  int violations = 0;
  for (const SquareFreeIdeal& i : ideals) {
    const int d = pure_degree(i);
    if (d == 0) continue;
    ++pure;
    const FVector f = f_vector(facet_complex(i));
    const FVector g = f_vector(nonface_complex(i));
    for (int k = 0; k < d - 1; ++k) {
      const std::uint64_t gk = g.dim() >= k ? g.at(k) : 0;
      if (f.at(k) > gk) ++violations;
    }
  }
  Detail d;
  d << pure << " pure ideals from the same corpus, violations=" << violations;
  return {pure > 0 && violations == 0, d.str()};
}

Outcome criterion10() {
  const SquareFreeIdeal i = testing::degree3_example();
  const HilbertSeries h = hilbert_series(f_vector(nonface_complex(i)), i.n());
  Detail d;
  bool match = true;
  d << "series:";
  for (int j = 0; j <= 5; ++j) {
    const std::uint64_t s = h.coefficient(j);
    const std::uint64_t b = oracle::standard_monomials_of_degree(i, j);
    match = match && s == b;
    d << ' ' << s << (s == b ? "" : "(!=" + std::to_string(b) + ")");
  }
  const std::vector<std::uint64_t> head{1, 6, 21, 46};
  const auto values = h.expand(3);
  return {match && values == head, d.str()};
}

}  // namespace

int main() {
  report(1, "degree-3 example f-vectors and verdict", criterion1);
  report(2, "degree-3 example primary decomposition", criterion2);
  report(3, "5-variable non-example conditions and f-vectors", criterion3);
  report(4, "5-variable non-example primary decomposition", criterion4);
  report(5, "exhaustive equivalence at (4,2) and (5,3)", criterion5);
  report(6, "(6,3) census equivalence", criterion6);
  report(7, "parity pruning", criterion7);
  const std::vector<SquareFreeIdeal> ideals = corpus();
  report(8, "oracle equivalences on random ideals", [&] { return criterion8(ideals); });
  report(9, "face containment below the top degree", [&] { return criterion9(ideals); });
  report(10, "Hilbert series vs monomial count", criterion10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
