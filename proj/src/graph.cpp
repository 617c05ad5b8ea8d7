#include "indpoly/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace indpoly {

namespace {

constexpr std::size_t kMaxVertexCount = std::size_t{1} << 30;

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  if (n > kMaxVertexCount)
    throw TooLargeError(n, kMaxVertexCount, "vertex count");
  std::vector<std::vector<Vertex>> adj(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  "): vertex index out of range [0, " + std::to_string(n) + ")");
    if (u == v)
      throw Error("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(edge_key(u, v)).second)
      throw Error("duplicate edge (" + std::to_string(u) + ", " +
                  std::to_string(v) + ")");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return Graph(std::move(adj), edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex v = 0; v < adj_.size(); ++v)
    for (Vertex u : adj_[v])
      if (u > v) out.emplace_back(v, u);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    if (!have_header) {
      long long header = 0;
      if (!(tokens >> header)) {
        if (tokens.eof()) continue;  // blank or comment-only line
        throw ParseError(line_no, "expected the vertex count, got \"" + line + "\"");
      }
      std::string rest;
      if (tokens >> rest)
        throw ParseError(line_no, "trailing tokens after the vertex count");
      if (header < 0)
        throw ParseError(line_no, "vertex count must be non-negative");
      if (static_cast<std::size_t>(header) > kMaxVertexCount)
        throw ParseError(line_no, "vertex count is too large");
      n = static_cast<std::size_t>(header);
      have_header = true;
      continue;
    }
    long long u = 0, v = 0;
    if (!(tokens >> u)) {
      if (tokens.eof()) continue;
      throw ParseError(line_no, "malformed edge line \"" + line + "\"");
    }
    if (!(tokens >> v))
      throw ParseError(line_no, "malformed edge line \"" + line + "\"");
    std::string rest;
    if (tokens >> rest)
      throw ParseError(line_no, "trailing tokens on edge line \"" + line + "\"");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n)
      throw ParseError(line_no, "vertex index out of range [0, " +
                                    std::to_string(n) + ")");
    const auto a = static_cast<Vertex>(u);
    const auto b = static_cast<Vertex>(v);
    if (a == b)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (!seen.insert(edge_key(a, b)).second)
      throw ParseError(line_no, "duplicate edge (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
    edges.emplace_back(a, b);
  }
  if (!have_header)
    throw ParseError(std::max(line_no, 1), "missing vertex-count header");
  return Graph::from_edges(n, edges);
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw Error("JSON graph must be an object with \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw Error("JSON field \"n\" must be a non-negative integer");
  const auto n = doc["n"].get<std::size_t>();
  if (!doc["edges"].is_array())
    throw Error("JSON field \"edges\" must be an array of [u, v] pairs");
  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  std::size_t index = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error("edges[" + std::to_string(index) + "] must be a [u, v] pair");
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n)
      throw Error("edges[" + std::to_string(index) +
                  "]: vertex index out of range [0, " + std::to_string(n) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++index;
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out += '\n';
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> components;
  std::vector<char> visited(n, 0);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<Vertex> comp;
    visited[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!visited[u]) {
          visited[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<char> kept(g.vertex_count(), 0);
  for (Vertex v : keep) kept[v] = 1;
  std::vector<Edge> edges;
  for (Vertex v : keep)
    for (Vertex u : g.neighbors(v))
      if (u > v && kept[u]) edges.emplace_back(local[v], local[u]);
  return Graph::from_edges(keep.size(), edges);
}

Tree validate_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw EmptyGraphError();

  // Connectivity first, so a disconnected graph with cycles still reports
  // the disconnection with a concrete vertex pair.
  std::vector<char> reached(n, 0);
  std::vector<Vertex> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!reached[u]) {
        reached[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != n) {
    Vertex other = 0;
    while (reached[other]) ++other;
    throw NotConnectedError(0, other);
  }
  if (g.edge_count() != n - 1) throw HasCycleError(n, g.edge_count());
  return Tree(g);
}

Forest split_components(const Graph& g) {
  if (g.vertex_count() == 0) throw EmptyGraphError();
  std::vector<Tree> trees;
  std::vector<std::vector<Vertex>> labels;
  for (auto& comp : connected_components(g)) {
    Graph sub = induced_subgraph(g, comp);
    if (sub.edge_count() != sub.vertex_count() - 1)
      throw HasCycleError(comp);
    trees.push_back(validate_tree(sub));
    labels.push_back(std::move(comp));
  }
  return Forest(std::move(trees), std::move(labels), g.vertex_count());
}

}  // namespace indpoly
