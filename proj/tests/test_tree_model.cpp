#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/prufer.hpp"

using namespace indpoly;

namespace {

// Independent connectivity + acyclicity check used to cross-examine
// validate_tree: union-find over the edge set.
bool is_tree_reference(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0 || edges.size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : edges) {
    auto ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

}  // namespace

TEST_SUITE("tree-model") {

TEST_CASE("graph construction and adjacency") {
  Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {0, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(2) == 1);
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("3\n0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  SUBCASE("comments and blank lines are ignored") {
    Graph h = parse_edge_list(
        "# a path on three vertices\n\n3   # header\n0 1\n\n# middle\n1 2\n");
    CHECK(h.edges() == g.edges());
  }
  SUBCASE("single vertex") {
    Graph h = parse_edge_list("1\n");
    CHECK(h.vertex_count() == 1);
    CHECK(h.edge_count() == 0);
  }
  SUBCASE("windows line endings") {
    Graph h = parse_edge_list("3\r\n0 1\r\n1 2\r\n");
    CHECK(h.edges() == g.edges());
  }
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);                     // missing header
  CHECK(line_of("x\n") == 1);                  // malformed header
  CHECK(line_of("3\n0 1 2\n") == 2);           // extra token
  CHECK(line_of("3\n0\n") == 2);               // missing endpoint
  CHECK(line_of("3\n0 one\n") == 2);           // non-numeric endpoint
  CHECK(line_of("3\n0 1\n1 3\n") == 3);        // endpoint out of range
  CHECK(line_of("3\n1 1\n") == 2);             // self loop
  CHECK(line_of("3\n0 1\n\n1 0\n") == 4);      // duplicate edge
  CHECK(line_of("-1\n") == 1);                 // negative header
}

TEST_CASE("json parsing") {
  Graph g = parse_graph_json(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(parse_graph_json("not json"), Error);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), Error);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": -1, "edges": []})"), Error);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), Error);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 5]]})"), Error);
}

TEST_CASE("serialization round trip") {
  Graph g = Graph::from_edges(5, {{3, 1}, {0, 4}, {1, 0}, {2, 1}});
  const std::string text = to_edge_list(g);
  CHECK(text == "5\n0 1\n0 4\n1 2\n1 3\n");
  Graph back = parse_edge_list(text);
  CHECK(back.edges() == g.edges());
  CHECK(to_edge_list(back) == text);
}

TEST_CASE("tree validation accepts exactly the trees") {
  CHECK_NOTHROW(validate_tree(parse_edge_list("1\n")));
  CHECK_NOTHROW(validate_tree(parse_edge_list("2\n0 1\n")));
  CHECK_THROWS_AS(validate_tree(Graph::from_edges(0, {})), EmptyGraphError);
  // Disconnected: two components.
  CHECK_THROWS_AS(validate_tree(Graph::from_edges(3, {{0, 1}})),
                  NotConnectedError);
  // Cycle: C4.
  CHECK_THROWS_AS(
      validate_tree(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
      HasCycleError);
  // Connected with an extra edge (triangle plus pendant).
  CHECK_THROWS_AS(
      validate_tree(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})),
      HasCycleError);

  SUBCASE("disconnection is reported with witnesses") {
    try {
      validate_tree(Graph::from_edges(4, {{0, 1}, {2, 3}}));
      FAIL("expected NotConnectedError");
    } catch (const NotConnectedError& e) {
      CHECK(e.first() == 0);
      CHECK(e.second() == 2);
    }
  }
}

TEST_CASE("tree validation agrees with union-find on every small graph") {
  // All graphs on up to 5 vertices, via edge subsets.
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
      Graph g = Graph::from_edges(n, edges);
      bool accepted = true;
      try {
        validate_tree(g);
      } catch (const Error&) {
        accepted = false;
      }
      CHECK(accepted == is_tree_reference(n, edges));
    }
  }
}

TEST_CASE("component splitting") {
  // P2 + P1: two tree components.
  Graph g = Graph::from_edges(3, {{0, 1}});
  Forest f = split_components(g);
  REQUIRE(f.component_count() == 2);
  CHECK(f.vertex_count() == 3);
  CHECK(f.component(0).vertex_count() == 2);
  CHECK(f.component(1).vertex_count() == 1);
  CHECK(f.original_labels(0) == std::vector<Vertex>{0, 1});
  CHECK(f.original_labels(1) == std::vector<Vertex>{2});

  // Components ordered by smallest original vertex, labels relabeled.
  Graph h = Graph::from_edges(6, {{4, 5}, {1, 3}, {3, 2}});
  Forest fh = split_components(h);
  REQUIRE(fh.component_count() == 3);
  CHECK(fh.original_labels(0) == std::vector<Vertex>{0});
  CHECK(fh.original_labels(1) == std::vector<Vertex>{1, 2, 3});
  CHECK(fh.original_labels(2) == std::vector<Vertex>{4, 5});
  CHECK(fh.component(1).edge_count() == 2);

  // A cyclic component is rejected and named.
  Graph c = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
  try {
    split_components(c);
    FAIL("expected HasCycleError");
  } catch (const HasCycleError& e) {
    CHECK(e.component() == std::vector<Vertex>{2, 3, 4});
  }

  CHECK_THROWS_AS(split_components(Graph::from_edges(0, {})), EmptyGraphError);
}

TEST_CASE("induced subgraph") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph sub = induced_subgraph(g, {0, 1, 2});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("prufer decoding basics") {
  // Sequence (0, 0) on 4 vertices is the star centered at 0.
  Tree star = prufer_decode({0, 0}, 4);
  CHECK(star.degree(0) == 3);
  // Single vertex and single edge come from the empty sequence.
  CHECK(prufer_decode({}, 1).vertex_count() == 1);
  CHECK(prufer_decode({}, 2).graph().edges() == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(prufer_decode({}, 0), EmptyGraphError);
  CHECK_THROWS_AS(prufer_decode({0}, 4), Error);      // wrong length
  CHECK_THROWS_AS(prufer_decode({4, 0}, 4), Error);   // symbol out of range
}

TEST_CASE("prufer encode inverts decode") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 10;
    PruferSequence seq(n - 2);
    for (auto& s : seq) s = static_cast<Vertex>(rng() % n);
    Tree t = prufer_decode(seq, n);
    CHECK(t.vertex_count() == n);
    CHECK(prufer_encode(t) == seq);
  }
  CHECK(prufer_encode(prufer_decode({}, 2)).empty());
  CHECK(prufer_encode(prufer_decode({}, 1)).empty());
}

TEST_CASE("prufer sequences cover all labeled trees on four vertices") {
  // 4^2 = 16 sequences must decode to 16 distinct trees (Cayley's count).
  std::set<std::vector<Edge>> seen;
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 4; ++b)
      seen.insert(prufer_decode({a, b}, 4).graph().edges());
  CHECK(seen.size() == 16);
}

}  // TEST_SUITE
