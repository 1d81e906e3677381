#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dalli/alliance.hpp"
#include "dalli/dimacs.hpp"
#include "dalli/errors.hpp"
#include "dalli/fpt.hpp"
#include "dalli/ilp.hpp"
#include "dalli/lowdeg.hpp"
#include "dalli/reduction.hpp"
#include "dalli/structure.hpp"

namespace py = pybind11;
using namespace dalli;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& forbidden) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph::build(n, list, forbidden);
}

std::optional<std::size_t> ilp_minimum(const Graph& g) {
  const IlpSolution s = solve_ilp(encode_min_alliance_ilp(g));
  if (s.status != IlpStatus::Optimal) return std::nullopt;
  return static_cast<std::size_t>(s.objective_value);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact minimum defensive alliance solvers";

  py::register_exception<VerificationFailure>(m, "VerificationFailure");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("forbidden") = std::vector<int>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("is_forbidden", &Graph::is_forbidden);

  py::class_<AllianceSolution>(m, "AllianceSolution")
      .def_readonly("members", &AllianceSolution::members)
      .def_readonly("size", &AllianceSolution::size)
      .def_readonly("valid", &AllianceSolution::valid);

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("write_dimacs", &write_dimacs);
  m.def("protection_threshold", &protection_threshold);
  m.def("verify_alliance", &verify_alliance, py::arg("graph"), py::arg("members"));
  m.def("brute_force_min_alliance", [](const Graph& g, std::size_t max_vertices) {
    BruteForceOptions opt;
    opt.max_vertices = max_vertices;
    return brute_force_min_alliance(g, opt);
  }, py::arg("graph"), py::arg("max_vertices") = 24);
  m.def("solve_lowdeg", &solve_min_alliance_lowdeg);
  m.def("ilp_minimum", &ilp_minimum);
  m.def("distance_to_clique_set", &distance_to_clique_set, py::arg("graph"), py::arg("k_max"));
  m.def("twin_cover_set", &twin_cover_set, py::arg("graph"), py::arg("k_max"));
  m.def("solve_dtc", [](const Graph& g, const VertexSet& D) { return solve_dtc(g, D); });
  m.def("solve_twincover", [](const Graph& g, const VertexSet& T) { return solve_twincover(g, T); });
  m.def("reduction_k_prime", [](const Graph& g, std::size_t k) { return build_reduction(g, k).k_prime; });
  m.def("moore_bound", [](int r, int g) { return moore_bound(r, g).get_str(); });
}
