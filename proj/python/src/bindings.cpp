#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclebetti/bijection.hpp"
#include "cyclebetti/cycle.hpp"
#include "cyclebetti/error.hpp"
#include "cyclebetti/hochster.hpp"
#include "cyclebetti/homology.hpp"
#include "cyclebetti/tableaux.hpp"

namespace py = pybind11;
using namespace cyclebetti;

namespace {

VertexSet to_set(const std::vector<int>& vertices) { return VertexSet(std::span<const int>(vertices)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded Betti numbers of cycle graphs and the tableau bijection";

  py::register_exception<Error>(m, "CycleBettiError", PyExc_ValueError);

  m.def("cycle_edges", &cycle_edges, py::arg("n"));
  m.def(
      "restrict",
      [](int n, const std::vector<int>& w) { return restrict(n, to_set(w)).components; },
      py::arg("n"), py::arg("W"), "Connected arcs of C_n[W], ordered by minimum vertex.");
  m.def(
      "m_set", [](int n, const std::vector<int>& w) { return m_set(n, to_set(w)).elements(); }, py::arg("n"),
      py::arg("W"));
  m.def(
      "m_prime", [](int n, const std::vector<int>& w) { return m_prime(n, to_set(w)).elements(); }, py::arg("n"),
      py::arg("W"));

  py::class_<MarkedSubset>(m, "MarkedSubset")
      .def(py::init([](int n, const std::vector<int>& w, int a) { return MarkedSubset{n, to_set(w), a}; }),
           py::arg("n"), py::arg("W"), py::arg("a"))
      .def_readonly("n", &MarkedSubset::n)
      .def_property_readonly("W", [](const MarkedSubset& s) { return s.w.elements(); })
      .def_readonly("a", &MarkedSubset::a)
      .def(py::self == py::self)
      .def("__hash__", [](const MarkedSubset& s) { return py::hash(py::make_tuple(s.n, s.w.mask(), s.a)); })
      .def("__str__", &format_marked_subset)
      .def("__repr__", [](const MarkedSubset& s) { return "MarkedSubset(" + format_marked_subset(s) + ")"; });

  m.def(
      "marked_subsets", [](int n, int j) { return marked_subsets(n, j); }, py::arg("n"), py::arg("j"));

  m.def(
      "reduced_betti_dim",
      [](int n, const std::vector<int>& w, int d) { return reduced_betti_dim(cycle_complex(n, to_set(w)), d); },
      py::arg("n"), py::arg("W"), py::arg("d"), "dim of reduced homology of C_n[W] over Q, via boundary ranks.");
  m.def(
      "graph_homology_oracle",
      [](int n, const std::vector<int>& w) {
        const auto h = graph_homology_oracle(n, to_set(w));
        return py::make_tuple(h.h_neg1, h.h0, h.h1);
      },
      py::arg("n"), py::arg("W"));

  py::class_<BettiTable>(m, "BettiTable")
      .def_readonly("n", &BettiTable::n)
      .def("at", &BettiTable::at, py::arg("i"), py::arg("j"))
      .def("nonzero", [](const BettiTable& t) {
        py::dict out;
        for (const auto& e : t.nonzero()) out[py::make_tuple(e.i, e.j)] = e.value;
        return out;
      });
  m.def("betti", &betti, py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("betti_table", &betti_table, py::arg("n"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("linear_strand", &linear_strand, py::arg("n"), py::arg("j"));

  py::class_<Tableau>(m, "Tableau")
      .def_property_readonly("rows", &Tableau::rows)
      .def_property_readonly("shape", [](const Tableau& t) { return t.shape().parts(); })
      .def("at", &Tableau::at, py::arg("row"), py::arg("col"))
      .def(py::self == py::self)
      .def("__hash__", [](const Tableau& t) { return py::hash(py::str(format_tableau(t))); })
      .def("__str__", &format_tableau)
      .def("__repr__", [](const Tableau& t) { return "Tableau('" + format_tableau(t) + "')"; });

  m.def(
      "hook_shape", [](int n, int j) { return hook_shape(n, j).parts(); }, py::arg("n"), py::arg("j"));
  m.def(
      "enumerate_syt", [](const std::vector<int>& parts) { return enumerate_syt(Shape(parts)); },
      py::arg("shape"));
  m.def(
      "count_syt_hook_length", [](const std::vector<int>& parts) { return count_syt_hook_length(std::span<const int>(parts)); },
      py::arg("shape"));
  m.def("transpose", &transpose, py::arg("tableau"));
  m.def("parse_tableau", &parse_tableau, py::arg("text"));
  m.def("format_tableau", &format_tableau, py::arg("tableau"));

  m.def("phi", &phi, py::arg("tableau"));
  m.def(
      "psi", [](int n, int j, const std::vector<int>& w, int a) { return psi(n, j, to_set(w), a); }, py::arg("n"),
      py::arg("j"), py::arg("W"), py::arg("a"));
  m.def("duality_check", &duality_check, py::arg("tableau"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("j", &VerificationReport::j)
      .def_readonly("tableau_count", &VerificationReport::tableau_count)
      .def_readonly("marked_subset_count", &VerificationReport::marked_subset_count)
      .def_readonly("injective", &VerificationReport::injective)
      .def_readonly("image_matches", &VerificationReport::image_matches)
      .def_readonly("psi_after_phi_identity", &VerificationReport::psi_after_phi_identity)
      .def_readonly("phi_after_psi_identity", &VerificationReport::phi_after_psi_identity)
      .def_readonly("counterexamples", &VerificationReport::counterexamples)
      .def_property_readonly("passed", &VerificationReport::passed);
  m.def("verify_bijection", &verify_bijection, py::arg("n"), py::arg("j"));
}
