#include "fideal/decomposition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace fideal {

namespace {

// True iff every vertex of `cover` is the only cover vertex on some member.
bool every_vertex_private(std::span<const VertexSet> family, VertexSet cover) {
  std::uint64_t owned = 0;
  for (VertexSet e : family) {
    const std::uint64_t hit = e.bits() & cover.bits();
    if (hit != 0 && (hit & (hit - 1)) == 0) owned |= hit;
  }
  return owned == cover.bits();
}

// Branches on the first member the partial cover misses. Vertices tried
// earlier on that member are forbidden below later siblings, so each cover
// is reached at most once; a branch dies as soon as some chosen vertex loses
// its last private member, since growing the cover never restores one.
void branch(std::span<const VertexSet> family, VertexSet cover, VertexSet forbidden,
            std::unordered_set<VertexSet>& found) {
  const auto missed = std::find_if(family.begin(), family.end(),
                                   [&](VertexSet e) { return !e.intersects(cover); });
  if (missed == family.end()) {
    found.insert(cover);
    return;
  }
  (*missed - forbidden).for_each([&](int v) {
    const VertexSet next = cover | VertexSet::singleton(v);
    if (every_vertex_private(family, next)) branch(family, next, forbidden, found);
    forbidden |= VertexSet::singleton(v);
  });
}

}  // namespace

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> family) {
  if (std::any_of(family.begin(), family.end(), [](VertexSet e) { return e.empty(); })) {
    return {};
  }
  std::unordered_set<VertexSet> found;
  branch(family, VertexSet{}, VertexSet{}, found);
  if (found.empty()) return {};
  std::vector<VertexSet> covers(found.begin(), found.end());
  return minimalize(covers);
}

std::vector<VertexSet> minimal_vertex_covers(const SquareFreeIdeal& ideal) {
  return minimal_transversals(ideal.generators());
}

bool validate_decomposition(const SquareFreeIdeal& ideal, const Decomposition& decomposition) {
  const auto agrees = [&](VertexSet m) {
    const bool in_all = std::all_of(
        decomposition.components.begin(), decomposition.components.end(),
        [&](const PrimeComponent& p) { return p.contains_monomial(m); });
    return ideal.contains_monomial(m) == in_all;
  };
  const int n = ideal.n();
  if (n <= 12) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (!agrees(VertexSet(m))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(kDecompositionSampleSeed);
  const std::uint64_t universe = VertexSet::full(n).bits();
  for (int i = 0; i < kDecompositionSampleSize; ++i) {
    if (!agrees(VertexSet(rng() & universe))) return false;
  }
  return true;
}

Decomposition primary_decomposition(const SquareFreeIdeal& ideal) {
  Decomposition out;
  int max_height = 0;
  out.height = ideal.n() + 1;
  for (VertexSet c : minimal_vertex_covers(ideal)) {
    out.components.push_back(PrimeComponent{c});
    out.height = std::min(out.height, c.cardinality());
    max_height = std::max(max_height, c.cardinality());
  }
  out.unmixed = out.height == max_height;
  if (!validate_decomposition(ideal, out)) {
    throw std::logic_error("primary decomposition does not reproduce the ideal");
  }
  return out;
}

int height(const SquareFreeIdeal& ideal) {
  // Canonical order is by cardinality, so the first cover is a smallest one.
  return minimal_vertex_covers(ideal).front().cardinality();
}

bool is_unmixed(const SquareFreeIdeal& ideal) {
  const auto covers = minimal_vertex_covers(ideal);
  return covers.front().cardinality() == covers.back().cardinality();
}

std::vector<VertexSet> nonface_facets_via_duality(const SquareFreeIdeal& ideal) {
  std::vector<VertexSet> facets;
  for (VertexSet c : minimal_vertex_covers(ideal)) facets.push_back(c.complement(ideal.n()));
  std::sort(facets.begin(), facets.end(), canonical_less);
  return facets;
}

std::string to_string(const Decomposition& decomposition) {
  std::string out;
  for (const PrimeComponent& p : decomposition.components) {
    if (!out.empty()) out += " ∩ ";
    out += '(';
    bool first = true;
    p.variables.for_each([&](int v) {
      if (!first) out += ',';
      out += 'x' + std::to_string(v);
      first = false;
    });
    out += ')';
  }
  return out;
}

}  // namespace fideal
