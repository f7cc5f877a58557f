#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "staut/profunctors.hpp"
#include "staut/quantale.hpp"
#include "staut/suites.hpp"

namespace py = pybind11;
using namespace staut;

namespace {

RunOptions options(std::uint64_t seed, int window, int depth) {
  RunOptions o;
  o.seed = seed;
  o.window = window;
  o.depth = depth;
  return o;
}

std::string one(const std::string& command, SuiteReport s, std::uint64_t seed) {
  RunReport r;
  r.command = command;
  r.seed = seed;
  r.suites.push_back(std::move(s));
  return to_json(r);
}

}  // namespace

PYBIND11_MODULE(_staut, m) {
  m.doc() = "Finite star-autonomous model checker";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<QuantaleError>(m, "QuantaleError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ProfError>(m, "ProfError", PyExc_ValueError);

  py::class_<Quantale, std::shared_ptr<Quantale>>(m, "Quantale")
      .def_property_readonly("description", &Quantale::describe)
      .def("__len__", &Quantale::size)
      .def("element_name", &Quantale::element_name)
      .def("find", &Quantale::find)
      .def("leq", &Quantale::leq)
      .def("tensor", &Quantale::tensor)
      .def("par", &Quantale::par)
      .def_property_readonly("unit", &Quantale::unit)
      .def_property_readonly("dualizer", &Quantale::dualizer)
      .def("rdual", &Quantale::rdual)
      .def("ldual", &Quantale::ldual)
      .def("is_cyclic", [](const Quantale& q) {
        CyclicVerdict v = is_cyclic(q);
        return py::make_tuple(v.cyclic, v.cyclic ? py::object(py::none()) : py::object(py::int_(v.witness)));
      });

  m.def("load_quantale", &load_quantale, py::arg("spec"), "Builtin shorthand (rel:N, l3, s3:<g>, ...) or file path");
  m.def("builtin_quantale_names", &builtin_quantale_names);
  m.def(
      "check_rel_negation",
      [](int n) {
        SuiteResult r = check_rel_negation(n);
        return py::make_tuple(r.pass, r.checks, r.witness);
      },
      py::arg("n"));


  m.def(
      "quantale_check",
      [](const std::string& spec, std::uint64_t seed, int window, int depth) {
        py::gil_scoped_release release;
        return one("quantale check " + spec, quantale_check(spec, options(seed, window, depth)), seed);
      },
      py::arg("spec"), py::kw_only(), py::arg("seed") = 1, py::arg("window") = 3, py::arg("depth") = 2);
  m.def(
      "vec_scalar_table",
      [](std::uint64_t seed, int window, int depth) {
        py::gil_scoped_release release;
        return one("vec scalar-table", vec_scalar_table(options(seed, window, depth)), seed);
      },
      py::kw_only(), py::arg("seed") = 1, py::arg("window") = 3, py::arg("depth") = 2);
  m.def(
      "prof_check",
      [](const std::string& path, std::uint64_t seed, int window, int depth) {
        py::gil_scoped_release release;
        return one("prof check " + path, prof_check(path, options(seed, window, depth)), seed);
      },
      py::arg("path"), py::kw_only(), py::arg("seed") = 1, py::arg("window") = 3, py::arg("depth") = 2);
  m.def(
      "braided_d2_suite",
      [](std::uint64_t seed, int window, int depth) {
        py::gil_scoped_release release;
        return one("braided d2-suite", braided_d2_suite(options(seed, window, depth)), seed);
      },
      py::kw_only(), py::arg("seed") = 1, py::arg("window") = 3, py::arg("depth") = 2);
  m.def(
      "zang_suite",
      [](const std::string& backend, std::uint64_t seed, int window, int depth) {
        py::gil_scoped_release release;
        return one("zang suite " + backend, zang_suite(backend, options(seed, window, depth)), seed);
      },
      py::arg("backend"), py::kw_only(), py::arg("seed") = 1, py::arg("window") = 3, py::arg("depth") = 2);
  m.def(
      "paper_all",
      [](std::uint64_t seed, int window, int depth) {
        py::gil_scoped_release release;
        return to_json(paper_all(options(seed, window, depth)));
      },
      py::kw_only(), py::arg("seed") = 1, py::arg("window") = 3, py::arg("depth") = 2);
}
