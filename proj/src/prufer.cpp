#include "indpoly/prufer.hpp"

#include <functional>
#include <queue>
#include <string>

namespace indpoly {

Tree prufer_decode(const PruferSequence& seq, std::size_t n) {
  const std::size_t expected = n >= 2 ? n - 2 : 0;
  if (seq.size() != expected)
    throw Error("sequence length " + std::to_string(seq.size()) +
                " does not match n = " + std::to_string(n) + " (expected " +
                std::to_string(expected) + ")");
  for (Vertex s : seq)
    if (s >= n)
      throw Error("sequence symbol " + std::to_string(s) +
                  " out of range [0, " + std::to_string(n) + ")");
  if (n == 0) throw EmptyGraphError();
  if (n == 1) return validate_tree(Graph::from_edges(1, {}));
  if (n == 2) return validate_tree(Graph::from_edges(2, {{0, 1}}));

  std::vector<std::size_t> degree(n, 1);
  for (Vertex s : seq) ++degree[s];

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex s : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.push(s);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  edges.emplace_back(a, b);
  return validate_tree(Graph::from_edges(n, edges));
}

PruferSequence prufer_encode(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 2) return {};

  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = t.degree(v);

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<char> removed(n, 0);
  PruferSequence seq;
  seq.reserve(n - 2);
  while (seq.size() < n - 2) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    Vertex parent = leaf;
    for (Vertex u : t.neighbors(leaf)) {
      if (!removed[u]) {
        parent = u;
        break;
      }
    }
    seq.push_back(parent);
    if (--degree[parent] == 1) leaves.push(parent);
  }
  return seq;
}

}  // namespace indpoly
