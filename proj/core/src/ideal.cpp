#include "fideal/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace fideal {

std::vector<VertexSet> minimalize(std::span<const VertexSet> sets) {
  if (sets.empty()) throw std::invalid_argument("minimalize: empty family");
  std::vector<VertexSet> sorted(sets.begin(), sets.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Canonical order puts every set after all of its proper subsets.
  std::vector<VertexSet> kept;
  for (VertexSet s : sorted) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](VertexSet k) { return k.is_subset_of(s); });
    if (!redundant) kept.push_back(s);
  }
  return kept;
}

bool is_antichain(std::span<const VertexSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].is_subset_of(sets[j])) return false;
    }
  }
  return true;
}

SquareFreeIdeal::SquareFreeIdeal(int n, std::vector<VertexSet> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw std::invalid_argument("ideal: n must lie in 1..64, got " + std::to_string(n_));
  }
  if (generators_.empty()) throw std::invalid_argument("ideal: zero ideal (no generators)");
  for (VertexSet g : generators_) {
    if (g.empty()) throw std::invalid_argument("ideal: unit ideal (empty generator)");
    if (!g.within(n_)) {
      throw std::invalid_argument("ideal: generator " + to_string(g) + " outside [" +
                                  std::to_string(n_) + "]");
    }
  }
  std::sort(generators_.begin(), generators_.end(), canonical_less);
  if (!is_antichain(generators_)) {
    throw std::invalid_argument("ideal: generators are not a minimal antichain");
  }
}

SquareFreeIdeal SquareFreeIdeal::from_generating_set(int n, std::vector<VertexSet> generators) {
  if (generators.empty()) throw std::invalid_argument("ideal: zero ideal (no generators)");
  return SquareFreeIdeal(n, minimalize(generators));
}

bool SquareFreeIdeal::contains_monomial(VertexSet monomial) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](VertexSet g) { return g.is_subset_of(monomial); });
}

VertexSet support(const SquareFreeIdeal& ideal) {
  VertexSet s;
  for (VertexSet g : ideal.generators()) s |= g;
  return s;
}

int degree(const SquareFreeIdeal& ideal) {
  int d = 0;
  for (VertexSet g : ideal.generators()) d = std::max(d, g.cardinality());
  return d;
}

bool is_pure_of_degree(const SquareFreeIdeal& ideal, int d) {
  if (d < 1) return false;
  for (VertexSet g : ideal.generators()) {
    if (g.cardinality() != d) return false;
  }
  return support(ideal) == VertexSet::full(ideal.n());
}

int pure_degree(const SquareFreeIdeal& ideal) {
  const int d = ideal.generators().front().cardinality();
  return is_pure_of_degree(ideal, d) ? d : 0;
}

namespace {

bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';';
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_separator(line[j])) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    line_start = line_end + 1;
  }
  return tokens;
}

int parse_positive(std::string_view digits, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed " + std::string(context) + ": '" + std::string(digits) + "'");
  }
  return value;
}

void add_vertex(VertexSet& set, int vertex, int n, std::string_view token) {
  if (vertex < 1 || vertex > n) {
    throw ParseError("vertex " + std::to_string(vertex) + " out of range 1.." +
                     std::to_string(n) + " in '" + std::string(token) + "'");
  }
  const VertexSet v = VertexSet::singleton(vertex);
  if (set.intersects(v)) {
    throw ParseError("repeated variable in '" + std::string(token) + "' (not square-free)");
  }
  set |= v;
}

VertexSet parse_generator(std::string_view token, int n) {
  VertexSet set;
  const bool compact = std::all_of(token.begin(), token.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (compact) {
    if (n > 9) {
      throw ParseError("compact token '" + std::string(token) +
                       "' is ambiguous for n > 9; use x1*x2 syntax");
    }
    for (char c : token) add_vertex(set, c - '0', n, token);
    return set;
  }
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t star = token.find('*', start);
    if (star == std::string_view::npos) star = token.size();
    std::string_view factor = token.substr(start, star - start);
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("malformed token '" + std::string(token) + "'");
    }
    add_vertex(set, parse_positive(factor.substr(1), "variable index"), n, token);
    start = star + 1;
  }
  return set;
}

}  // namespace

SquareFreeIdeal parse_ideal(std::string_view text, ParseMode mode,
                            std::vector<std::string>* warnings) {
  const auto tokens = tokenize(text);
  if (tokens.empty() || tokens.front().substr(0, 2) != "n=") {
    throw ParseError("ideal text must start with n=<int>");
  }
  const int n = parse_positive(tokens.front().substr(2), "vertex count");
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("n must lie in 1..64, got " + std::to_string(n));
  }
  if (tokens.size() == 1) throw ParseError("empty generator list (zero ideal)");

  std::vector<VertexSet> raw;
  std::unordered_set<VertexSet> seen;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const VertexSet g = parse_generator(tokens[i], n);
    if (!seen.insert(g).second) {
      if (mode == ParseMode::kStrict) {
        throw ParseError("duplicate generator " + monomial_string(g));
      }
      if (warnings) warnings->push_back("dropped duplicate generator " + monomial_string(g));
      continue;
    }
    raw.push_back(g);
  }

  std::vector<VertexSet> minimal = minimalize(raw);
  if (minimal.size() != raw.size()) {
    for (VertexSet g : raw) {
      if (std::find(minimal.begin(), minimal.end(), g) != minimal.end()) continue;
      if (mode == ParseMode::kStrict) {
        throw ParseError("generator " + monomial_string(g) +
                         " is a multiple of another generator (not minimal)");
      }
      if (warnings) warnings->push_back("dropped redundant generator " + monomial_string(g));
    }
  }
  return SquareFreeIdeal(n, std::move(minimal));
}

std::string monomial_string(VertexSet monomial) {
  std::string out;
  monomial.for_each([&](int v) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v);
  });
  return out;
}

std::string render_ideal(const SquareFreeIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.n()) + "\n";
  bool first = true;
  for (VertexSet g : ideal.generators()) {
    if (!first) out += ' ';
    out += monomial_string(g);
    first = false;
  }
  out += '\n';
  return out;
}

std::string to_string(const SquareFreeIdeal& ideal) {
  std::string out = "(";
  bool first = true;
  for (VertexSet g : ideal.generators()) {
    if (!first) out += ", ";
    g.for_each([&](int v) { out += "x" + std::to_string(v); });
    first = false;
  }
  out += ')';
  return out;
}

}  // namespace fideal
