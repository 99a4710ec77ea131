#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "mwm.hpp"
#include "sat.hpp"

namespace py = pybind11;

namespace {

std::vector<int> max_weight_matching(const std::vector<std::tuple<int, int, double>>& edges,
                                     int nvertex, bool maxcardinality) {
  std::vector<std::array<int, 2>> ends;
  std::vector<double> wts;
  ends.reserve(edges.size());
  wts.reserve(edges.size());
  for (const auto& e : edges) {
    ends.push_back({std::get<0>(e), std::get<1>(e)});
    wts.push_back(std::get<2>(e));
  }
  ftmwm::MaxWeightMatching m(ends, wts, nvertex, maxcardinality);
  return m.run();
}

}  // namespace

PYBIND11_MODULE(_native, m) {
  m.doc() = "Native kernels: CDCL SAT core and exact blossom matching";

  m.def("max_weight_matching", &max_weight_matching, py::arg("edges"), py::arg("nvertex"),
        py::arg("maxcardinality") = false,
        "Exact maximum-weight matching; returns mate array (-1 = unmatched).");

  py::class_<ftsat::Solver>(m, "SatSolver")
      .def(py::init<>())
      .def("new_var", &ftsat::Solver::new_var)
      .def("num_vars", &ftsat::Solver::num_vars)
      .def("add_clause",
           [](ftsat::Solver& s, const std::vector<int>& dimacs) {
             // DIMACS-style literals: +v / -v with v >= 1.
             std::vector<int> lits;
             lits.reserve(dimacs.size());
             for (int l : dimacs) {
               int var = std::abs(l) - 1;
               lits.push_back(ftsat::lit_of(var, l < 0));
             }
             return s.add_clause(std::move(lits));
           })
      .def("solve",
           [](ftsat::Solver& s, const std::vector<int>& assumptions, int64_t budget) {
             std::vector<int> lits;
             for (int l : assumptions) lits.push_back(ftsat::lit_of(std::abs(l) - 1, l < 0));
             return s.solve(lits, budget);
           },
           py::arg("assumptions") = std::vector<int>(), py::arg("conflict_budget") = -1,
           py::call_guard<py::gil_scoped_release>())
      .def("model",
           [](const ftsat::Solver& s) {
             py::list out;
             for (char c : s.model()) out.append(static_cast<bool>(c));
             return out;
           })
      .def("okay", &ftsat::Solver::okay);
}
