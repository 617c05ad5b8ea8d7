#include "indpoly/generators.hpp"

#include <random>

#include "indpoly/prufer.hpp"

namespace indpoly {

namespace {

// Bounded draw with mask rejection. std::uniform_int_distribution is
// implementation-defined, so it cannot back a cross-platform determinism
// promise; this can.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t value = rng() & mask;
    if (value < bound) return value;
  }
}

Tree tree_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  return validate_tree(Graph::from_edges(n, edges));
}

}  // namespace

Tree gen_path(std::size_t n) {
  if (n == 0) throw Error("path family requires n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return tree_from_edges(n, edges);
}

Tree gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  edges.reserve(leaves);
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return tree_from_edges(leaves + 1, edges);
}

Tree gen_caterpillar(std::size_t spine, std::size_t legs_per_vertex) {
  if (spine == 0) throw Error("caterpillar family requires spine >= 1");
  const std::size_t n = spine * (1 + legs_per_vertex);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
  for (Vertex v = 0; v < spine; ++v)
    for (std::size_t j = 0; j < legs_per_vertex; ++j)
      edges.emplace_back(v, static_cast<Vertex>(spine + v * legs_per_vertex + j));
  return tree_from_edges(n, edges);
}

Tree gen_complete_binary(std::size_t depth) {
  if (depth > 25) throw TooLargeError(depth, 25, "complete binary tree depth");
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t left = 2 * static_cast<std::size_t>(v) + 1;
    if (left < n) edges.emplace_back(v, static_cast<Vertex>(left));
    if (left + 1 < n) edges.emplace_back(v, static_cast<Vertex>(left + 1));
  }
  return tree_from_edges(n, edges);
}

Tree gen_spider(std::size_t legs, std::size_t leg_length) {
  const std::size_t n = 1 + legs * leg_length;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i < legs; ++i) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < leg_length; ++k) {
      const auto next = static_cast<Vertex>(1 + i * leg_length + k);
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return tree_from_edges(n, edges);
}

Tree gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("random family requires n >= 1");
  PruferSequence seq;
  if (n >= 3) {
    std::mt19937_64 rng(seed);
    seq.reserve(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i)
      seq.push_back(static_cast<Vertex>(draw_below(rng, n)));
  }
  return prufer_decode(seq, n);
}

void enumerate_all_trees(std::size_t n,
                         const std::function<void(const Tree&)>& fn) {
  if (n == 0) throw Error("tree enumeration requires n >= 1");
  if (n > kEnumerateMaxVertices)
    throw TooLargeError(n, kEnumerateMaxVertices, "tree enumeration");
  if (n <= 2) {
    fn(prufer_decode({}, n));
    return;
  }
  PruferSequence seq(n - 2, 0);
  for (;;) {
    fn(prufer_decode(seq, n));
    // Odometer over all n^(n-2) sequences.
    std::size_t pos = 0;
    while (pos < seq.size() && seq[pos] + 1 == n) {
      seq[pos] = 0;
      ++pos;
    }
    if (pos == seq.size()) break;
    ++seq[pos];
  }
}

std::string_view family_name(TreeFamily family) {
  switch (family) {
    case TreeFamily::Path: return "path";
    case TreeFamily::Star: return "star";
    case TreeFamily::Caterpillar: return "caterpillar";
    case TreeFamily::CompleteBinary: return "complete_binary";
    case TreeFamily::Spider: return "spider";
    case TreeFamily::Random: return "random";
  }
  return "unknown";
}

std::optional<TreeFamily> parse_family(std::string_view name) {
  if (name == "path") return TreeFamily::Path;
  if (name == "star") return TreeFamily::Star;
  if (name == "caterpillar") return TreeFamily::Caterpillar;
  if (name == "complete_binary") return TreeFamily::CompleteBinary;
  if (name == "spider") return TreeFamily::Spider;
  if (name == "random") return TreeFamily::Random;
  return std::nullopt;
}

Tree build_tree(const TreeFamilySpec& spec) {
  switch (spec.family) {
    case TreeFamily::Path: return gen_path(spec.n);
    case TreeFamily::Star:
      if (spec.n == 0) throw Error("star family requires n >= 1");
      return gen_star(spec.n - 1);
    case TreeFamily::Caterpillar: return gen_caterpillar(spec.spine, spec.legs);
    case TreeFamily::CompleteBinary: return gen_complete_binary(spec.depth);
    case TreeFamily::Spider: return gen_spider(spec.legs, spec.leg_length);
    case TreeFamily::Random: return gen_random_tree(spec.n, spec.seed);
  }
  throw std::logic_error("unhandled tree family");
}

}  // namespace indpoly
