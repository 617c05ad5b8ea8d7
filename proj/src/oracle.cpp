#include "indpoly/oracle.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace indpoly {

namespace {

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> mask(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v)) mask[v] |= std::uint32_t{1} << u;
  return mask;
}

// Vertices of the connected component of `mask` containing its lowest bit.
std::uint32_t component_of_lowest(const std::vector<std::uint32_t>& adj,
                                  std::uint32_t mask) {
  std::uint32_t comp = mask & (~mask + 1);
  std::uint32_t frontier = comp;
  while (frontier != 0) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t fresh = (adj[v] & mask) & ~comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp;
}

Polynomial recurse_on_mask(const std::vector<std::uint32_t>& adj,
                           std::uint32_t mask) {
  if (mask == 0) return Polynomial::one();

  const std::uint32_t comp = component_of_lowest(adj, mask);
  if (comp != mask) {
    // Disconnected: the polynomial is the product over the pieces.
    return recurse_on_mask(adj, comp) * recurse_on_mask(adj, mask ^ comp);
  }

  // Pivot: smallest index among the maximum-degree vertices.
  int pivot = -1;
  int best_degree = -1;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(adj[v] & mask);
    if (d > best_degree) {
      best_degree = d;
      pivot = v;
    }
  }

  const std::uint32_t self = std::uint32_t{1} << pivot;
  const std::uint32_t closed = (adj[pivot] & mask) | self;
  const Polynomial without_v = recurse_on_mask(adj, mask & ~self);
  const Polynomial without_nv = recurse_on_mask(adj, mask & ~closed);
  return without_v + without_nv.shifted_up();
}

}  // namespace

Polynomial brute_force_polynomial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceMaxVertices)
    throw TooLargeError(n, kBruteForceMaxVertices, "brute-force enumeration");
  const auto adj = neighbor_masks(g);
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t subset = 0; subset < limit; ++subset) {
    bool independent = true;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj[v] & subset) != 0) {
        independent = false;
        break;
      }
    }
    if (independent) ++counts[std::popcount(subset)];
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (std::uint64_t c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return Polynomial(std::move(coeffs));
}

Polynomial naive_recursion_polynomial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kNaiveRecursionMaxVertices)
    throw TooLargeError(n, kNaiveRecursionMaxVertices, "deletion recursion");
  const auto adj = neighbor_masks(g);
  const std::uint32_t full =
      n == 0 ? 0 : (n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  return recurse_on_mask(adj, full);
}

Polynomial path_polynomial(std::size_t n) {
  Polynomial prev = Polynomial::one();                    // P_0
  if (n == 0) return prev;
  Polynomial cur = Polynomial::one() + Polynomial::x();   // P_1
  for (std::size_t k = 2; k <= n; ++k) {
    Polynomial next = cur + prev.shifted_up();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial star_polynomial(std::size_t leaves) {
  const Polynomial factor = Polynomial::one() + Polynomial::x();
  if (leaves == 0) return factor;
  Polynomial product = Polynomial::one();
  for (std::size_t i = 0; i < leaves; ++i) product = product * factor;
  std::vector<BigInt> coeffs = product.ascending();
  coeffs[1] += 1;  // the center alone
  return Polynomial(std::move(coeffs));
}

int greedy_tree_mis(const Tree& t) {
  const std::size_t n = t.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) stack.push_back(v);
  }

  int taken = 0;
  while (!stack.empty()) {
    const Vertex leaf = stack.back();
    stack.pop_back();
    if (!alive[leaf] || degree[leaf] != 1) continue;  // stale entry
    ++taken;
    alive[leaf] = 0;
    Vertex parent = leaf;
    for (Vertex u : t.neighbors(leaf)) {
      if (alive[u]) {
        parent = u;
        break;
      }
    }
    alive[parent] = 0;
    for (Vertex w : t.neighbors(parent)) {
      if (alive[w] && --degree[w] == 1) stack.push_back(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) ++taken;  // isolated remainders
  return taken;
}

}  // namespace indpoly
