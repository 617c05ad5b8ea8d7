#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "indpoly/dp.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/oracle.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/prufer.hpp"

namespace py = pybind11;

namespace {

using indpoly::BigInt;
using indpoly::Edge;
using indpoly::Graph;
using indpoly::Polynomial;
using indpoly::Tree;
using indpoly::Vertex;

// GMP integers cross into Python losslessly through their decimal form.
py::object to_py_int(const BigInt& value) {
  const std::string digits = value.get_str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

BigInt to_bigint(const py::int_& value) {
  return BigInt(static_cast<std::string>(py::str(value)));
}

py::list descending(const Polynomial& p) {
  py::list out;
  for (const BigInt& c : p.descending()) out.append(to_py_int(c));
  return out;
}

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

Polynomial compute(std::size_t n, const std::vector<Edge>& edges, bool forest,
                   indpoly::StatsTotals* totals = nullptr) {
  Graph g = make_graph(n, edges);
  if (forest) return independence_polynomial(indpoly::split_components(g), totals);
  indpoly::TreeResult r = independence_polynomial(indpoly::validate_tree(g));
  if (totals) {
    totals->vertex_visits = r.stats.total_vertex_visits();
    totals->edge_explorations = r.stats.total_edge_explorations();
    totals->poly_mul_scalar_ops = r.stats.poly_mul_scalar_ops;
  }
  return r.polynomial;
}

}  // namespace

PYBIND11_MODULE(_indpoly, m) {
  m.doc() = "independence polynomials of trees and forests";

  py::register_exception<indpoly::Error>(m, "InputError", PyExc_ValueError);

  m.def(
      "independence_polynomial",
      [](std::size_t n, const std::vector<Edge>& edges, bool forest) {
        return descending(compute(n, edges, forest));
      },
      py::arg("n"), py::arg("edges"), py::arg("forest") = false,
      "Coefficients of I(G; x) in descending power order.");

  m.def(
      "compute_record",
      [](std::size_t n, const std::vector<Edge>& edges, bool forest) {
        indpoly::StatsTotals totals;
        Polynomial p = compute(n, edges, forest, &totals);
        py::dict record;
        record["n"] = n;
        record["alpha"] = p.degree();
        record["coefficients"] = descending(p);
        record["polynomial"] = p.to_string();
        record["vertex_visits"] = totals.vertex_visits;
        record["edge_explorations"] = totals.edge_explorations;
        record["poly_mul_scalar_ops"] = totals.poly_mul_scalar_ops;
        return record;
      },
      py::arg("n"), py::arg("edges"), py::arg("forest") = false,
      "Polynomial plus traversal statistics as a dict.");

  m.def(
      "evaluate",
      [](std::size_t n, const std::vector<Edge>& edges, const py::int_& at,
         bool forest) {
        return to_py_int(compute(n, edges, forest).evaluate(to_bigint(at)));
      },
      py::arg("n"), py::arg("edges"), py::arg("at"), py::arg("forest") = false,
      "Exact value of I(G; at); at 1 this counts all independent sets.");

  m.def(
      "independence_number",
      [](std::size_t n, const std::vector<Edge>& edges) {
        return indpoly::independence_number(
            indpoly::validate_tree(make_graph(n, edges)));
      },
      py::arg("n"), py::arg("edges"),
      "Size of a maximum independent set of the tree.");

  m.def(
      "brute_force_polynomial",
      [](std::size_t n, const std::vector<Edge>& edges) {
        return descending(indpoly::brute_force_polynomial(make_graph(n, edges)));
      },
      py::arg("n"), py::arg("edges"),
      "Subset-enumeration oracle; any graph, small n only.");

  m.def(
      "path_polynomial",
      [](std::size_t n) { return descending(indpoly::path_polynomial(n)); },
      py::arg("n"), "Closed-form I(P_n; x) via the path recurrence.");

  m.def(
      "star_polynomial",
      [](std::size_t leaves) {
        return descending(indpoly::star_polynomial(leaves));
      },
      py::arg("leaves"), "Closed-form star polynomial (1+x)^leaves + x.");

  m.def(
      "random_tree",
      [](std::size_t n, std::uint64_t seed) {
        return indpoly::gen_random_tree(n, seed).graph().edges();
      },
      py::arg("n"), py::arg("seed"),
      "Edges of a uniformly random labeled tree (deterministic per seed).");

  m.def(
      "prufer_decode",
      [](const std::vector<Vertex>& seq, std::size_t n) {
        return indpoly::prufer_decode(seq, n).graph().edges();
      },
      py::arg("sequence"), py::arg("n"),
      "Edges of the labeled tree encoded by the sequence.");

  m.def(
      "prufer_encode",
      [](std::size_t n, const std::vector<Edge>& edges) {
        return indpoly::prufer_encode(
            indpoly::validate_tree(make_graph(n, edges)));
      },
      py::arg("n"), py::arg("edges"), "Sequence encoding of a labeled tree.");

  m.def(
      "enumerate_trees",
      [](std::size_t n) {
        std::vector<std::vector<Edge>> out;
        indpoly::enumerate_all_trees(
            n, [&](const Tree& t) { out.push_back(t.graph().edges()); });
        return out;
      },
      py::arg("n"), "Edge lists of every labeled tree on n vertices (n <= 8).");

  m.def(
      "parse_edge_list",
      [](const std::string& text) {
        Graph g = indpoly::parse_edge_list(text);
        return py::make_tuple(g.vertex_count(), g.edges());
      },
      py::arg("text"), "Parse edge-list text into (n, edges).");

  m.def(
      "format_edge_list",
      [](std::size_t n, const std::vector<Edge>& edges) {
        return indpoly::to_edge_list(make_graph(n, edges));
      },
      py::arg("n"), py::arg("edges"), "Canonical edge-list text of a graph.");
}
