#include "confrep/irreducibility.hpp"
#include "confrep/irrep.hpp"
#include "confrep/ortho.hpp"
#include "confrep/spectral.hpp"
#include "confrep/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace confrep;

namespace {

WeightVec weight(const std::string& series, const std::string& mu) { return WeightVec::parse(parse_series(series), mu); }

}  // namespace

// Results cross the boundary as JSON text; the Python package decodes them.
PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations for generalized conformal representations of orthogonal Lie algebras";

    m.def("weyl_dim", [](const std::string& s, const std::string& mu) { return weyl_dim(weight(s, mu)); },
          py::arg("series"), py::arg("mu"));
    m.def("casimir", [](const std::string& s, const std::string& mu) { return casimir_eigenvalue(weight(s, mu)).str(); },
          py::arg("series"), py::arg("mu"));
    m.def("classify",
          [](const std::string& s, const std::string& mu, const std::string& b) {
              return classify_b(weight(s, mu), Rat::parse(b)).str();
          },
          py::arg("series"), py::arg("mu"), py::arg("b"));
    m.def("critical_set", [](const std::string& s, const std::string& mu) { return critical_b_set(weight(s, mu)).str(); },
          py::arg("series"), py::arg("mu"));
    m.def("build_irrep_json",
          [](const std::string& s, const std::string& mu) { return irrep_to_json(build_irrep(weight(s, mu))).dump(); },
          py::arg("series"), py::arg("mu"));
    m.def("charpoly_json",
          [](const std::string& s, const std::string& mu) { return to_json(verify_charpoly_lemma(weight(s, mu))).dump(); },
          py::arg("series"), py::arg("mu"));
    m.def("scan_json",
          [](const std::string& s, const std::string& mu, const std::string& b, int max_degree) {
              return to_json(surjectivity_scan(weight(s, mu), Rat::parse(b), max_degree)).dump();
          },
          py::arg("series"), py::arg("mu"), py::arg("b"), py::arg("max_degree") = 4);
    m.def("verify_brackets_json",
          [](int n, const std::string& s) { return to_json(verify_bracket_tables(n, parse_series(s))).dump(); },
          py::arg("n"), py::arg("series"));
    m.def("harmonic_dims",
          [](int k, int n, const std::string& s) { return harmonic_decompose(k, n, parse_series(s)).component_dims; },
          py::arg("k"), py::arg("n"), py::arg("series"));
    m.def("suite_json",
          [](std::vector<int> only, bool inject_fault) {
              SuiteOptions o;
              o.only = std::move(only);
              o.inject_fault = inject_fault;
              return suite_json(run_suite(o)).dump();
          },
          py::arg("only") = std::vector<int>{}, py::arg("inject_fault") = false);
}
