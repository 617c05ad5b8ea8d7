#include "indpoly/dp.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace indpoly {

std::uint64_t TraversalStats::total_vertex_visits() const {
  return std::accumulate(vertex_visits.begin(), vertex_visits.end(),
                         std::uint64_t{0});
}

std::uint64_t TraversalStats::total_edge_explorations() const {
  return std::accumulate(edge_explorations.begin(), edge_explorations.end(),
                         std::uint64_t{0});
}

bool TraversalStats::every_vertex_visited_once() const {
  for (auto c : vertex_visits)
    if (c != 1) return false;
  return true;
}

bool TraversalStats::every_edge_explored_once() const {
  for (Vertex v = 0; v < edge_explorations.size(); ++v) {
    const std::uint32_t expected = (v == root) ? 0 : 1;
    if (edge_explorations[v] != expected) return false;
  }
  return true;
}

namespace {

// Post-order skeleton of one engine run. children are grouped per parent in
// ascending index order (CSR layout over child_offset/children).
struct Walk {
  std::vector<Vertex> post_order;
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<std::uint32_t> child_offset;
  std::vector<Vertex> children;
};

Walk walk_post_order(const Graph& g, Vertex root, TraversalStats& stats) {
  const std::size_t n = g.vertex_count();
  stats.root = root;
  stats.vertex_visits.assign(n, 0);
  stats.edge_explorations.assign(n, 0);

  Walk w;
  w.parent.assign(n, root);
  w.post_order.reserve(n);

  std::vector<char> discovered(n, 0);
  std::vector<char> expanded(n, 0);
  std::vector<Vertex> stack;
  std::vector<Vertex> scratch;
  stack.push_back(root);
  discovered[root] = 1;

  while (!stack.empty()) {
    const Vertex v = stack.back();
    if (!expanded[v]) {
      expanded[v] = 1;
      ++stats.vertex_visits[v];
      scratch.clear();
      for (Vertex u : g.neighbors(v)) {
        if (!discovered[u]) {
          discovered[u] = 1;
          w.parent[u] = v;
          ++stats.edge_explorations[u];
          scratch.push_back(u);
        }
      }
      // Reversed push so the smallest-index child is processed first.
      for (auto it = scratch.rbegin(); it != scratch.rend(); ++it)
        stack.push_back(*it);
    } else {
      stack.pop_back();
      w.post_order.push_back(v);
    }
  }

  w.child_offset.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u)
    if (u != root) ++w.child_offset[w.parent[u] + 1];
  for (std::size_t v = 0; v < n; ++v) w.child_offset[v + 1] += w.child_offset[v];
  w.children.resize(n > 0 ? n - 1 : 0);
  std::vector<std::uint32_t> cursor(w.child_offset.begin(), w.child_offset.end() - 1);
  for (Vertex u = 0; u < n; ++u)
    if (u != root) w.children[cursor[w.parent[u]]++] = u;
  return w;
}

// The dynamic program over a recorded walk. With release_consumed set, child
// states are cleared once the parent has multiplied them in, so only the
// traversal frontier stays resident.
void run_dp(const Walk& w, std::vector<VertexState>& states,
            TraversalStats& stats, bool release_consumed) {
  states.assign(w.parent.size(), VertexState{});
  for (const Vertex v : w.post_order) {
    VertexState& s = states[v];
    s.children.assign(w.children.begin() + w.child_offset[v],
                      w.children.begin() + w.child_offset[v + 1]);
    Polynomial left = Polynomial::one();
    Polynomial right = Polynomial::one();
    for (Vertex u : s.children) {
      left = mul(left, states[u].subtree, &stats.poly_mul_scalar_ops);
      right = mul(right, states[u].minus_self, &stats.poly_mul_scalar_ops);
    }
    s.minus_self = std::move(left);
    s.minus_neighborhood = std::move(right);
    s.subtree = s.minus_self + s.minus_neighborhood.shifted_up();
    if (release_consumed) {
      for (Vertex u : s.children) states[u] = VertexState{};
      s.minus_neighborhood = Polynomial::zero();  // never read by the parent
    }
  }
}

// Closed-form counters for the n <= 2 short-circuit: each vertex counts as
// visited and the single edge of the two-vertex tree as explored, so the
// once-each invariants hold uniformly across all sizes.
TraversalStats base_case_stats(std::size_t n) {
  TraversalStats stats;
  stats.root = 0;
  stats.vertex_visits.assign(n, 1);
  stats.edge_explorations.assign(n, 1);
  stats.edge_explorations[0] = 0;
  return stats;
}

Polynomial one_plus_x() {
  return Polynomial::one() + Polynomial::x();
}

}  // namespace

Vertex first_inner_vertex(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n < 3)
    throw std::logic_error(
        "first_inner_vertex requires a tree with at least 3 vertices");
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) >= 2) return v;
  throw std::logic_error("no inner vertex found in a tree with n >= 3");
}

TreeResult independence_polynomial(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n == 1) return {one_plus_x(), base_case_stats(1)};
  if (n == 2) {
    return {Polynomial::one() + Polynomial::x() + Polynomial::x(),
            base_case_stats(2)};
  }
  const Vertex root = first_inner_vertex(t);
  TraversalStats stats;
  const Walk w = walk_post_order(t.graph(), root, stats);
  std::vector<VertexState> states;
  run_dp(w, states, stats, /*release_consumed=*/true);
  return {std::move(states[root].subtree), std::move(stats)};
}

Polynomial independence_polynomial(const Forest& f, StatsTotals* totals) {
  Polynomial product = Polynomial::one();
  std::uint64_t product_ops = 0;
  for (std::size_t i = 0; i < f.component_count(); ++i) {
    TreeResult r = independence_polynomial(f.component(i));
    product = mul(product, r.polynomial, &product_ops);
    if (totals != nullptr) {
      totals->vertex_visits += r.stats.total_vertex_visits();
      totals->edge_explorations += r.stats.total_edge_explorations();
      totals->poly_mul_scalar_ops += r.stats.poly_mul_scalar_ops;
    }
  }
  if (totals != nullptr) totals->poly_mul_scalar_ops += product_ops;
  return product;
}

StateMapResult compute_states(const Tree& t, Vertex root) {
  const std::size_t n = t.vertex_count();
  if (n < 3)
    throw std::logic_error("compute_states requires a tree with at least 3 vertices");
  if (root >= n || t.degree(root) < 2)
    throw std::logic_error("compute_states requires an inner root vertex");
  StateMapResult result;
  result.root = root;
  const Walk w = walk_post_order(t.graph(), root, result.stats);
  run_dp(w, result.states, result.stats, /*release_consumed=*/false);
  return result;
}

int independence_number(const Tree& t) {
  return independence_polynomial(t).polynomial.degree();
}

TraversalStats traverse_only(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n < 3) return base_case_stats(n);
  TraversalStats stats;
  walk_post_order(t.graph(), first_inner_vertex(t), stats);
  return stats;
}

bool states_satisfy_recurrence(const StateMapResult& result) {
  for (const VertexState& s : result.states) {
    Polynomial left = Polynomial::one();
    Polynomial right = Polynomial::one();
    for (Vertex u : s.children) {
      left = left * result.states[u].subtree;
      right = right * result.states[u].minus_self;
    }
    if (s.minus_self != left) return false;
    if (s.minus_neighborhood != right) return false;
    if (s.subtree != s.minus_self + s.minus_neighborhood.shifted_up())
      return false;
  }
  return true;
}

}  // namespace indpoly
