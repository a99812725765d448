#include "fideal/vertex_set.hpp"

#include <stdexcept>

namespace fideal {

namespace {

std::uint64_t bit_for(int vertex) {
  if (vertex < 1 || vertex > kMaxVertices) {
    throw std::out_of_range("vertex " + std::to_string(vertex) + " outside 1.." +
                            std::to_string(kMaxVertices));
  }
  return std::uint64_t{1} << (vertex - 1);
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) bits |= bit_for(v);
  return VertexSet(bits);
}

VertexSet VertexSet::of(const std::vector<int>& vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) bits |= bit_for(v);
  return VertexSet(bits);
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string to_string(VertexSet set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace fideal
