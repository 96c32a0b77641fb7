#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "salemforge/cli.hpp"
#include "salemforge/coxeter.hpp"
#include "salemforge/mau.hpp"
#include "salemforge/mcmullen.hpp"
#include "salemforge/product.hpp"
#include "salemforge/toric.hpp"

namespace py = pybind11;
using namespace salemforge;

namespace {

// Every call returns a JSON document as a string; the Python layer decodes it.
template <class F>
std::string released(F&& f) {
  py::gil_scoped_release nogil;
  return f().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Salem numbers, McMullen pairs, MAU sequences and Siegel disks of product automorphisms.";

  m.def("en_formula", [](unsigned long n) { return released([&] { return to_json(en_from_formula(n)); }); }, py::arg("n"));
  m.def("en_matrix", [](unsigned long n) { return released([&] { return to_json(en_from_matrix(n)); }); }, py::arg("n"));
  m.def("salem_factor", [](unsigned long n) { return released([&] { return to_json(salem_factor(n)); }); }, py::arg("n"));
  m.def(
      "integrality_certificate",
      [](unsigned long n) { return released([&] { return to_json(integrality_certificate(n)); }); }, py::arg("n"));
  m.def(
      "mcmullen_data",
      [](unsigned long n, Bits precision) { return released([&] { return to_json(mcmullen_data(n, precision), true); }); },
      py::arg("n"), py::arg("precision") = 256);
  m.def(
      "mau_build",
      [](std::size_t length, Bits precision, long bound) {
        return released([&] { return to_json(mau_build(length, precision, bound)); });
      },
      py::arg("length"), py::arg("precision") = 512, py::arg("bound") = 32);
  m.def(
      "check_fan",
      [](const std::string& fan_json) {
        return released([&] { return to_json(check_fan(fan_from_json(nlohmann::json::parse(fan_json)))); });
      },
      py::arg("fan_json"));
  m.def(
      "standard_fan", [](const std::string& name) { return released([&] { return to_json(standard_fan(name)); }); },
      py::arg("name"));
  m.def(
      "classify_product",
      [](const std::string& spec_json, const std::string& base_dir, Bits precision, long bound) {
        return released([&] {
          ProductSpec spec = product_spec_from_json(nlohmann::json::parse(spec_json), base_dir, precision, bound);
          nlohmann::json j = to_json(siegel_count(spec, bound, precision));
          j["entropy"] = to_json(product_entropy(spec));
          return j;
        });
      },
      py::arg("spec_json"), py::arg("base_dir") = "", py::arg("precision") = 512, py::arg("bound") = 32);
  m.def(
      "run",
      [](std::vector<std::string> argv) {
        argv.insert(argv.begin(), "salemforge");
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release nogil;
          code = dispatch(argv, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("argv"));
}
