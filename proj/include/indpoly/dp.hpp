#pragma once

#include <cstdint>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Instrumentation gathered by one engine run. Vertex visits count the first
// touch of each vertex; edge explorations count the discovery of a child
// across its parent edge, keyed by the child endpoint (the root's slot stays
// zero). On a correct run every vertex is visited exactly once and every
// edge is explored exactly once.
struct TraversalStats {
  Vertex root = 0;
  std::vector<std::uint32_t> vertex_visits;
  std::vector<std::uint32_t> edge_explorations;
  std::uint64_t poly_mul_scalar_ops = 0;

  std::uint64_t total_vertex_visits() const;
  std::uint64_t total_edge_explorations() const;
  bool every_vertex_visited_once() const;
  bool every_edge_explored_once() const;
};

// Totals across several runs (forest components); what the CLI reports.
struct StatsTotals {
  std::uint64_t vertex_visits = 0;
  std::uint64_t edge_explorations = 0;
  std::uint64_t poly_mul_scalar_ops = 0;
};

// The per-vertex triple computed for the subtree rooted at v:
//   subtree             I(T_v; x)
//   minus_self          I(T_v - v; x)    = product of children's subtree
//   minus_neighborhood  I(T_v - N[v]; x) = product of children's minus_self
// and subtree = minus_self + x * minus_neighborhood.
struct VertexState {
  Polynomial subtree;
  Polynomial minus_self;
  Polynomial minus_neighborhood;
  std::vector<Vertex> children;
};

struct TreeResult {
  Polynomial polynomial;
  TraversalStats stats;
};

struct StateMapResult {
  std::vector<VertexState> states;
  TraversalStats stats;
  Vertex root = 0;
};

// Smallest-index vertex of degree >= 2; requires n >= 3 (throws
// std::logic_error otherwise - a caller bug, not an input error).
Vertex first_inner_vertex(const Tree& t);

// Independence polynomial of a tree. n = 1 and n = 2 short-circuit to the
// closed forms; larger trees root at first_inner_vertex() and run the
// post-order engine with an explicit stack (no call-stack recursion), so
// arbitrarily deep trees are safe. Child states are released as soon as the
// parent consumes them, keeping memory proportional to the traversal
// frontier rather than the whole tree.
TreeResult independence_polynomial(const Tree& t);

// Product of component polynomials; the empty forest yields the constant 1.
// When totals is non-null, per-component counters and the product's scalar
// multiplications are accumulated into it.
Polynomial independence_polynomial(const Forest& f, StatsTotals* totals = nullptr);

// Full post-order run from a chosen root, retaining every vertex state.
// Requires n >= 3 and degree(root) >= 2. The root's subtree polynomial is
// I(T; x) for any valid root. Intended for inspection and verification;
// memory grows with the sum of all subtree polynomial sizes.
StateMapResult compute_states(const Tree& t, Vertex root);

// Degree of the independence polynomial (size of a maximum independent set).
int independence_number(const Tree& t);

// The instrumented post-order walk alone, with the polynomial arithmetic
// skipped. Separates the linear traversal cost from the (superlinear)
// coefficient arithmetic at large scale; poly_mul_scalar_ops stays zero.
TraversalStats traverse_only(const Tree& t);

// Recomputes the defining identities of every retained state: the two child
// products and subtree = minus_self + x * minus_neighborhood.
bool states_satisfy_recurrence(const StateMapResult& result);

}  // namespace indpoly
