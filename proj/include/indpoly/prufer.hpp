#pragma once

#include <cstddef>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// Length n-2 sequence over [0, n) in bijection with labeled trees on n
// vertices (n >= 3). By convention n = 1 and n = 2 use the empty sequence:
// decoding yields the single vertex and the single edge respectively, so
// corpus code can treat all sizes uniformly.
using PruferSequence = std::vector<Vertex>;

// Standard decoding: repeatedly attach the smallest-label leaf to the next
// sequence symbol. Throws on a length mismatch or an out-of-range symbol.
Tree prufer_decode(const PruferSequence& seq, std::size_t n);

// Inverse of prufer_decode; returns the empty sequence for n <= 2.
PruferSequence prufer_encode(const Tree& t);

}  // namespace indpoly
