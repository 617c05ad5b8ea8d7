#pragma once

#include <cstddef>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Independent ground-truth implementations used to verify the engine. They
// favor being obviously correct over being fast.

inline constexpr std::size_t kBruteForceMaxVertices = 30;
inline constexpr std::size_t kNaiveRecursionMaxVertices = 25;

// Counts independent subsets of every cardinality by enumerating all 2^n
// vertex subsets. Works on arbitrary graphs. Throws TooLargeError above
// kBruteForceMaxVertices.
Polynomial brute_force_polynomial(const Graph& g);

// Literal vertex-deletion recursion I(G) = I(G - v) + x * I(G - N[v]) with
// the disconnected intermediates split into component products. The pivot is
// the smallest-index vertex of maximum degree. Exponential time; arbitrary
// graphs up to kNaiveRecursionMaxVertices.
Polynomial naive_recursion_polynomial(const Graph& g);

// I(P_n) through the path recurrence I(P_n) = I(P_{n-1}) + x * I(P_{n-2}),
// seeded with I(P_0) = 1 and I(P_1) = 1 + x. Cheap at any n.
Polynomial path_polynomial(std::size_t n);

// Star with the given number of leaves: (1 + x)^leaves + x, or 1 + x for the
// bare center.
Polynomial star_polynomial(std::size_t leaves);

// Exact maximum-independent-set size of a tree by leaf peeling: repeatedly
// take a leaf, delete it and its neighbor; isolated remainders count too.
int greedy_tree_mis(const Tree& t);

}  // namespace indpoly
