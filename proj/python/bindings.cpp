#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdom/bounds.hpp"
#include "sdom/errors.hpp"
#include "sdom/exact.hpp"
#include "sdom/extremal.hpp"
#include "sdom/report.hpp"

namespace py = pybind11;

namespace {

sdom::ExactConfig make_config(std::size_t cap, std::size_t cover_cap) { return {cap, cover_cap}; }

}  // namespace

PYBIND11_MODULE(_sdom, m) {
  m.doc() = "Simultaneous domination: exact values, constructions and bounds";
  m.attr("__version__") = sdom::kVersion;

  static py::exception<sdom::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sdom::Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<sdom::Factoring>(m, "Factoring")
      .def_static("parse", &sdom::parse_factoring, py::arg("text"))
      .def_static("read", &sdom::read_factoring_file, py::arg("path"))
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<std::vector<sdom::Edge>>& factors) {
            std::vector<sdom::Graph> graphs;
            for (const auto& edges : factors) graphs.emplace_back(n, edges);
            return sdom::Factoring(n, std::move(graphs));
          },
          py::arg("n"), py::arg("factors"))
      .def_property_readonly("n", &sdom::Factoring::n)
      .def_property_readonly("k", &sdom::Factoring::k)
      .def_property_readonly("delta", &sdom::Factoring::delta)
      .def("edges", [](const sdom::Factoring& f, std::size_t i) { return f.factor(i).edges(); })
      .def("serialize", &sdom::serialize_factoring)
      .def("hash", &sdom::factoring_hash)
      .def("is_sd_set",
           [](const sdom::Factoring& f, const std::vector<sdom::Vertex>& vertices) {
             return sdom::is_sd_set(f, sdom::VertexSet::from_range(f.n(), vertices));
           })
      .def("__eq__", [](const sdom::Factoring& a, const sdom::Factoring& b) { return a == b; });

  m.def(
      "generate",
      [](const std::string& family, const std::map<std::string, std::string>& params,
         std::uint64_t seed) { return sdom::generate_family(family, params, seed); },
      py::arg("family"), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("seed") = 1);

  m.def(
      "sd_number",
      [](const sdom::Factoring& f, std::size_t cap) {
        const sdom::SDResult r = sdom::sd_number_exact(f, make_config(cap, sdom::ExactConfig{}.cover_cap));
        return py::make_tuple(r.size, r.set.to_vector());
      },
      py::arg("factoring"), py::arg("cap") = sdom::ExactConfig{}.sd_cap);

  m.def("method_names", &sdom::method_names);

  m.def(
      "solve_json",
      [](const sdom::Factoring& f, const std::vector<std::string>& methods, std::size_t cap,
         std::size_t cover_cap) {
        return sdom::to_json(sdom::run_methods(f, methods, make_config(cap, cover_cap))).dump();
      },
      py::arg("factoring"), py::arg("methods") = std::vector<std::string>{"all"},
      py::arg("cap") = sdom::ExactConfig{}.sd_cap, py::arg("cover_cap") = sdom::ExactConfig{}.cover_cap);

  m.def(
      "bounds_json",
      [](const sdom::Factoring& f, bool gammas) {
        return sdom::to_json(sdom::build_bound_report(sdom::describe(f, gammas))).dump();
      },
      py::arg("factoring"), py::arg("gammas") = false);

  m.def("tables_tsv", &sdom::tables_tsv);
}
