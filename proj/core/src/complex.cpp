#include "fideal/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "fideal/binomial.hpp"
#include "fideal/decomposition.hpp"

namespace fideal {

namespace {

constexpr int kMaxScanVertices = 24;

// Inclusion-maximal members, canonically sorted, dropping the empty set.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  // Walk largest first so any superset of s has already been seen.
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    if (it->empty()) continue;
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](VertexSet k) { return it->is_subset_of(k); });
    if (!covered) kept.push_back(*it);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return kept;
}

void check_scan_size(int n, const char* what) {
  if (n > kMaxScanVertices) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " too large for an exhaustive 2^n scan (max 24)");
  }
}

// acc[k] += sign * #(non-empty k-subsets of the union of the boolean
// intervals below the members of `family`); family is a maximal antichain.
void accumulate_union(std::span<const VertexSet> family, int sign, std::vector<Int128>& acc) {
  std::vector<VertexSet> meets;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const VertexSet top = family[k];
    meets.clear();
    bool absorbed = false;
    for (std::size_t i = 0; i < k; ++i) {
      const VertexSet meet = family[i] & top;
      if (meet == top) absorbed = true;
      meets.push_back(meet);
    }
    // top below an earlier member adds nothing new.
    if (absorbed) continue;
    const int size = top.cardinality();
    for (int j = 1; j <= size; ++j) {
      acc[static_cast<std::size_t>(j)] =
          checked_add(acc[static_cast<std::size_t>(j)],
                      static_cast<Int128>(sign) * static_cast<Int128>(binomial(size, j)));
    }
    const auto reduced = maximal_elements(meets);
    if (!reduced.empty()) accumulate_union(reduced, -sign, acc);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets)
    : n_(n), facets_(std::move(facets)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw std::invalid_argument("complex: n must lie in 1..64, got " + std::to_string(n_));
  }
  for (VertexSet f : facets_) {
    if (f.empty()) throw std::invalid_argument("complex: empty facet; use an empty facet list for {∅}");
    if (!f.within(n_)) throw std::invalid_argument("complex: facet " + to_string(f) + " outside [n]");
  }
  std::sort(facets_.begin(), facets_.end(), canonical_less);
  if (!is_antichain(facets_)) throw std::invalid_argument("complex: facets are not an antichain");
}

SimplicialComplex SimplicialComplex::generated_by(int n, std::vector<VertexSet> faces) {
  return SimplicialComplex(n, maximal_elements(std::move(faces)));
}

int SimplicialComplex::dimension() const {
  return facets_.empty() ? -1 : facets_.back().cardinality() - 1;
}

VertexSet SimplicialComplex::vertex_set() const {
  VertexSet v;
  for (VertexSet f : facets_) v |= f;
  return v;
}

SimplicialComplex facet_complex(const SquareFreeIdeal& ideal) {
  return SimplicialComplex(ideal.n(), {ideal.generators().begin(), ideal.generators().end()});
}

SimplicialComplex nonface_complex(const SquareFreeIdeal& ideal) {
  auto facets = nonface_facets_via_duality(ideal);
  // I ⊇ (x_1, ..., x_n): the only cover is [n] and δ_N(I) = {∅}.
  if (facets.size() == 1 && facets.front().empty()) facets.clear();
  return SimplicialComplex(ideal.n(), std::move(facets));
}

std::vector<VertexSet> nonface_facets_by_search(const SquareFreeIdeal& ideal) {
  const int n = ideal.n();
  check_scan_size(n, "nonface_facets_by_search");
  std::vector<VertexSet> facets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const VertexSet face(m);
    if (ideal.contains_monomial(face)) continue;
    bool maximal = true;
    face.complement(n).for_each([&](int v) {
      if (maximal && !ideal.contains_monomial(face | VertexSet::singleton(v))) maximal = false;
    });
    if (maximal) facets.push_back(face);
  }
  std::sort(facets.begin(), facets.end(), canonical_less);
  return facets;
}

bool is_face(const SimplicialComplex& complex, VertexSet face) {
  if (!face.within(complex.n())) throw std::invalid_argument("is_face: face outside [n]");
  if (face.empty()) return true;
  return std::any_of(complex.facets().begin(), complex.facets().end(),
                     [&](VertexSet f) { return face.is_subset_of(f); });
}

FVector f_vector(const SimplicialComplex& complex) {
  const int top = complex.dimension() + 1;
  std::vector<Int128> acc(static_cast<std::size_t>(top) + 1, 0);
  const std::vector<VertexSet> family(complex.facets().begin(), complex.facets().end());
  accumulate_union(family, 1, acc);
  FVector fv;
  for (int k = 1; k <= top; ++k) {
    const Int128 c = acc[static_cast<std::size_t>(k)];
    if (c < 0 || c > static_cast<Int128>(~std::uint64_t{0})) {
      throw OverflowError("face count outside 64-bit range");
    }
    fv.counts.push_back(static_cast<std::uint64_t>(c));
  }
  return fv;
}

FVector f_vector_bruteforce(const SimplicialComplex& complex) {
  const int n = complex.n();
  check_scan_size(n, "f_vector_bruteforce");
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(n) + 1, 0);
  int largest = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const VertexSet s(m);
    if (!is_face(complex, s)) continue;
    ++by_size[static_cast<std::size_t>(s.cardinality())];
    largest = std::max(largest, s.cardinality());
  }
  FVector fv;
  fv.counts.assign(by_size.begin() + 1, by_size.begin() + 1 + largest);
  return fv;
}

SquareFreeIdeal facet_ideal(const SimplicialComplex& complex) {
  if (complex.only_empty_face()) throw std::invalid_argument("facet_ideal: complex {∅} has no facets");
  return SquareFreeIdeal(complex.n(), {complex.facets().begin(), complex.facets().end()});
}

SquareFreeIdeal nonface_ideal(const SimplicialComplex& complex) {
  const int n = complex.n();
  if (complex.only_empty_face()) {
    std::vector<VertexSet> variables;
    for (int v = 1; v <= n; ++v) variables.push_back(VertexSet::singleton(v));
    return SquareFreeIdeal(n, std::move(variables));
  }
  // G is a non-face iff it meets the complement of every facet.
  std::vector<VertexSet> complements;
  for (VertexSet f : complex.facets()) {
    if (f == VertexSet::full(n)) {
      throw std::invalid_argument("nonface_ideal: full simplex has no non-faces");
    }
    complements.push_back(f.complement(n));
  }
  return SquareFreeIdeal(n, minimal_transversals(complements));
}

std::uint64_t HilbertSeries::coefficient(int j) const {
  // 1/(1-t)^n = Σ_m C(n+m-1, m) t^m
  Int128 total = 0;
  for (int i = 0; i < static_cast<int>(numerator.size()) && i <= j; ++i) {
    const int m = j - i;
    const Int128 series = denominator_power == 0
                              ? (m == 0 ? 1 : 0)
                              : static_cast<Int128>(binomial(denominator_power + m - 1, m));
    total = checked_add(total, checked_mul(numerator[static_cast<std::size_t>(i)], series));
  }
  if (total < 0 || total > static_cast<Int128>(~std::uint64_t{0})) {
    throw OverflowError("Hilbert function value outside 64-bit range");
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::uint64_t> HilbertSeries::expand(int max_degree) const {
  std::vector<std::uint64_t> out;
  for (int j = 0; j <= max_degree; ++j) out.push_back(coefficient(j));
  return out;
}

HilbertSeries hilbert_series(const FVector& fv, int n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("hilbert_series: n outside 1..64");
  if (fv.dim() + 1 > n) throw std::invalid_argument("hilbert_series: dimension exceeds n - 1");
  for (int i = 0; i <= fv.dim(); ++i) {
    if (fv.at(i) > binomial(n, i + 1)) {
      throw std::invalid_argument("hilbert_series: f_" + std::to_string(i) + " exceeds C(" +
                                  std::to_string(n) + ", " + std::to_string(i + 1) + ")");
    }
  }
  // Σ_k f_{k-1} t^k (1-t)^{n-k}, k = 0 .. dim+1, f_{-1} = 1.
  std::vector<Int128> num(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= fv.dim() + 1; ++k) {
    const Int128 f = k == 0 ? 1 : static_cast<Int128>(fv.at(k - 1));
    for (int r = 0; r <= n - k; ++r) {
      const Int128 c = static_cast<Int128>(binomial(n - k, r)) * (r % 2 == 0 ? 1 : -1);
      num[static_cast<std::size_t>(k + r)] =
          checked_add(num[static_cast<std::size_t>(k + r)], checked_mul(f, c));
    }
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  HilbertSeries out;
  out.denominator_power = n;
  out.n = n;
  for (Int128 c : num) {
    if (c > INT64_MAX || c < INT64_MIN) throw OverflowError("Hilbert numerator coefficient overflows");
    out.numerator.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

std::string to_string(const SimplicialComplex& complex) {
  if (complex.only_empty_face()) return "<{}>";
  std::string out = "<";
  bool first = true;
  for (VertexSet f : complex.facets()) {
    if (!first) out += ", ";
    out += to_string(f);
    first = false;
  }
  out += '>';
  return out;
}

std::string to_string(const FVector& fv) {
  std::string out = "(";
  for (std::size_t i = 0; i < fv.counts.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(fv.counts[i]);
  }
  out += ')';
  return out;
}

std::string to_string(const HilbertSeries& series) {
  std::string body;
  for (std::size_t i = 0; i < series.numerator.size(); ++i) {
    const std::int64_t c = series.numerator[i];
    if (c == 0) continue;
    const std::uint64_t magnitude = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (body.empty()) {
      if (c < 0) body += '-';
    } else {
      body += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      body += std::to_string(magnitude);
    } else {
      if (magnitude != 1) body += std::to_string(magnitude) + '*';
      body += 't';
      if (i > 1) body += '^' + std::to_string(i);
    }
  }
  if (body.empty()) body = "0";
  return "(" + body + ") / (1-t)^" + std::to_string(series.denominator_power);
}

}  // namespace fideal
