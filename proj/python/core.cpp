#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regulab/betti.hpp"
#include "regulab/catalog.hpp"
#include "regulab/even_connection.hpp"
#include "regulab/io.hpp"
#include "regulab/structure.hpp"
#include "regulab/verify.hpp"

namespace py = pybind11;
using namespace regulab;

namespace {

std::vector<std::pair<std::string, std::string>> labelled_edges(const SimpleGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
  return out;
}

MonomialIdeal ideal_of(const SimpleGraph& g, unsigned power_) {
  return power(edge_ideal(g), power_);
}

py::dict table_dict(const BettiTable& t) {
  py::dict d;
  for (auto& [ij, b] : t.entries) d[py::make_tuple(ij.first, ij.second)] = b;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "RegulabError", PyExc_ValueError);

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](std::vector<std::string> labels,
                       std::vector<std::pair<std::string, std::string>> edges) {
             return SimpleGraph::from_labelled_edges(std::move(labels), edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("load", &load_graph, py::arg("source"))
      .def_property_readonly("vertices", &SimpleGraph::labels)
      .def_property_readonly("edges", &labelled_edges)
      .def("__len__", &SimpleGraph::size)
      .def("adjacent",
           [](const SimpleGraph& g, const std::string& u, const std::string& v) {
             return g.adjacent(g.index(u), g.index(v));
           })
      .def("complement", [](const SimpleGraph& g) { return complement(g); })
      .def("multiply",
           [](const SimpleGraph& g, const std::map<std::string, int>& k) {
             return multiply_vertices(g, k);
           })
      .def("is_gap_free", [](const SimpleGraph& g) { return is_gap_free(g); })
      .def("is_diamond_free", [](const SimpleGraph& g) { return is_diamond_free(g); })
      .def("to_text", [](const SimpleGraph& g) { return format_graph_text(g); })
      .def("to_json", [](const SimpleGraph& g) { return format_graph_json(g); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) {
        return "<Graph " + std::to_string(g.size()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  m.def("catalog_names", &catalog::names);
  m.def("catalog_graph", [](const std::string& name) { return catalog::get(name); },
        py::arg("name"));

  m.def(
      "regularity",
      [](const SimpleGraph& g, unsigned power_, int characteristic) {
        return regularity(ideal_of(g, power_), FieldSpec{characteristic});
      },
      py::arg("graph"), py::arg("power") = 1, py::arg("characteristic") = 0,
      "Castelnuovo-Mumford regularity of the power of the edge ideal.");
  m.def(
      "ideal_regularity",
      [](const std::string& ideal, int characteristic) {
        return regularity(parse_ideal(ideal), FieldSpec{characteristic});
      },
      py::arg("ideal"), py::arg("characteristic") = 0);
  m.def(
      "betti_table",
      [](const SimpleGraph& g, unsigned power_, int characteristic) {
        return table_dict(betti_table(ideal_of(g, power_), FieldSpec{characteristic}));
      },
      py::arg("graph"), py::arg("power") = 1, py::arg("characteristic") = 0,
      "Graded Betti numbers as a dict {(i, j): b_ij}.");
  m.def(
      "ideal_betti_table",
      [](const std::string& ideal, int characteristic) {
        return table_dict(betti_table(parse_ideal(ideal), FieldSpec{characteristic}));
      },
      py::arg("ideal"), py::arg("characteristic") = 0);

  m.def(
      "colon_graph",
      [](const SimpleGraph& g, const std::string& product) {
        return colon_graph(g, SFoldProduct::parse(g, product)).graph;
      },
      py::arg("graph"), py::arg("product"),
      "Graph whose edge ideal is the polarized colon by the product of edges.");

  m.def(
      "classify",
      [](const SimpleGraph& g) {
        auto r = classify_gap_diamond_free(g);
        py::dict d;
        d["status"] = to_string(r.status);
        d["base"] = r.base;
        d["multiplicities"] = r.multiplicities;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("graph"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, int jobs, double timeout) {
        SuiteOptions o;
        o.jobs = jobs;
        o.timeout_secs = timeout;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, o);
        }
        return py::module_::import("json").attr("loads")(r.json());
      },
      py::arg("name"), py::arg("jobs") = 0, py::arg("timeout") = 0.0,
      "Runs a verification suite and returns its JSON report as a dict.");

  m.attr("__version__") = version();
}
