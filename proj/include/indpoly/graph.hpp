#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph over 0-based contiguous vertex labels, stored as
// sorted adjacency lists. Immutable after construction; adjacency is
// symmetric, loop-free and duplicate-free by construction.
class Graph {
public:
  // Validates vertex ranges and rejects self-loops and duplicate edges
  // (regardless of endpoint order).
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return m_; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  // Neighbors in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  // All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

private:
  Graph(std::vector<std::vector<Vertex>> adj, std::size_t m)
      : adj_(std::move(adj)), m_(m) {}

  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// A validated tree: connected with exactly n-1 edges, n >= 1. Obtained
// through validate_tree().
class Tree {
public:
  const Graph& graph() const noexcept { return g_; }
  std::size_t vertex_count() const noexcept { return g_.vertex_count(); }
  std::size_t edge_count() const noexcept { return g_.edge_count(); }
  std::size_t degree(Vertex v) const { return g_.degree(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return g_.neighbors(v); }

private:
  friend Tree validate_tree(const Graph& g);
  explicit Tree(Graph g) : g_(std::move(g)) {}

  Graph g_;
};

// Partition of a graph into tree components. Component vertices are
// relabeled 0..n_i-1; original_labels(i) maps the local labels back.
// Components are ordered by their smallest original vertex.
class Forest {
public:
  std::size_t component_count() const noexcept { return components_.size(); }
  const Tree& component(std::size_t i) const { return components_[i]; }
  const std::vector<Vertex>& original_labels(std::size_t i) const {
    return labels_[i];
  }
  std::size_t vertex_count() const noexcept { return total_vertices_; }

private:
  friend Forest split_components(const Graph& g);
  Forest(std::vector<Tree> components, std::vector<std::vector<Vertex>> labels,
         std::size_t total)
      : components_(std::move(components)),
        labels_(std::move(labels)),
        total_vertices_(total) {}

  std::vector<Tree> components_;
  std::vector<std::vector<Vertex>> labels_;
  std::size_t total_vertices_ = 0;
};

// Edge-list text format: first significant line is the vertex count, each
// following non-empty line is "u v". '#' starts a comment; blank lines are
// ignored. Errors carry 1-based line numbers.
Graph parse_edge_list(const std::string& text);

// JSON form: {"n": int, "edges": [[u, v], ...]}.
Graph parse_graph_json(const std::string& text);

// Canonical edge-list text: header line, then edges with u < v in
// lexicographic order. parse(serialize(parse(t))) is a fixed point.
std::string to_edge_list(const Graph& g);

// Checks both connectivity and the edge count so that cycles and
// disconnection are reported distinctly.
Tree validate_tree(const Graph& g);

// Requires every component to be a tree; singleton vertices become 1-vertex
// trees. Throws HasCycleError naming the offending component otherwise.
Forest split_components(const Graph& g);

// Vertex sets of the connected components, each ascending, ordered by
// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Subgraph induced by `keep` (ascending, duplicate-free); vertex i of the
// result corresponds to keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

}  // namespace indpoly
