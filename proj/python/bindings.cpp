// Copyright 2026 The qcwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "qcwalk/distance.hpp"
#include "qcwalk/errors.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/time_grid.hpp"
#include "qcwalk/verify_suite.hpp"
#include "qcwalk/walks.hpp"

namespace py = pybind11;
using namespace qcwalk;

namespace {

SpectralDecomposition spectrum_of(const Graph& g) { return eigendecompose(laplacian(g)); }

}  // namespace

PYBIND11_MODULE(_qcwalk, m) {
  m.doc() = "Quantum-classical dynamical distance of continuous-time walks on graphs";

  auto computation_error =
      py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
  py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError",
                                                 computation_error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("j"))
      .def("__len__", &Graph::size)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.size()) + " edges=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def("graph_from_edges", &graph_from_edges, py::arg("n"), py::arg("edges"));
  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::optional<std::size_t> extra,
         std::uint64_t seed) { return generate(parse_graph_kind(kind), n, extra, seed); },
      py::arg("kind"), py::arg("n"), py::arg("extra") = py::none(), py::arg("seed") = 0);
  m.def(
      "laplacian", [](const Graph& g) { return laplacian(g).matrix(); }, py::arg("graph"));
  m.def("degree", &degree, py::arg("graph"), py::arg("j"));
  m.def(
      "max_degree",
      [](const Graph& g) {
        const auto md = max_degree(g);
        return py::make_tuple(md.degree, md.node);
      },
      py::arg("graph"));
  m.def("average_degree", &average_degree, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("fiedler_value", &fiedler_value, py::arg("graph"));
  m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
  m.def("write_edge_list", &write_edge_list_file, py::arg("path"), py::arg("graph"));
  m.def(
      "format_edge_list",
      [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
      },
      py::arg("graph"));

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_property_readonly("n", &SpectralDecomposition::size)
      .def_property_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def_property_readonly("eigenvectors", &SpectralDecomposition::eigenvectors)
      .def_property_readonly("connected", &SpectralDecomposition::connected)
      .def_property_readonly("fiedler", &SpectralDecomposition::fiedler);

  m.def("eigendecompose", &spectrum_of, py::arg("graph"));
  m.def("heat_propagator", &heat_propagator, py::arg("spec"), py::arg("t"));
  m.def("unitary_propagator", &unitary_propagator, py::arg("spec"), py::arg("t"));

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<const Eigen::MatrixXcd&>(), py::arg("matrix"))
      .def_static("pure", &DensityMatrix::pure, py::arg("psi"))
      .def_static("diagonal", &DensityMatrix::diagonal, py::arg("weights"))
      .def_property_readonly("matrix", &DensityMatrix::matrix);
  m.def("uhlmann_fidelity", &uhlmann_fidelity, py::arg("rho1"), py::arg("rho2"));

  m.def(
      "classical_distribution",
      [](const SpectralDecomposition& s, Node j, double t) {
        return classical_distribution(s, j, t).values;
      },
      py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def(
      "quantum_amplitudes",
      [](const SpectralDecomposition& s, Node j, double t) {
        return quantum_amplitudes(s, j, t).values;
      },
      py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def("localized_fidelity",
        py::overload_cast<const SpectralDecomposition&, Node, double>(&localized_fidelity),
        py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def("coherence", py::overload_cast<const SpectralDecomposition&, Node, double>(&coherence),
        py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def("classical_fidelity",
        py::overload_cast<const SpectralDecomposition&, Node, double>(&classical_fidelity),
        py::arg("spec"), py::arg("j"), py::arg("t"));

  m.def("conditional_distance", &conditional_distance, py::arg("spec"), py::arg("j"),
        py::arg("t"));
  m.def(
      "qc_distance",
      [](const SpectralDecomposition& s, double t) {
        const auto v = qc_distance(s, t);
        return py::make_tuple(v.value, v.argmax);
      },
      py::arg("spec"), py::arg("t"));
  m.def("average_distance", &average_distance, py::arg("spec"), py::arg("t"));

  py::class_<DistanceCurve>(m, "DistanceCurve")
      .def_readonly("times", &DistanceCurve::times)
      .def_readonly("conditional", &DistanceCurve::conditional)
      .def_readonly("qc", &DistanceCurve::qc)
      .def_readonly("argmax_node", &DistanceCurve::argmax_node)
      .def_readonly("average", &DistanceCurve::average);
  m.def(
      "distance_curve",
      [](const SpectralDecomposition& s, const std::vector<double>& grid, unsigned workers) {
        py::gil_scoped_release release;
        return distance_curve(s, grid, workers);
      },
      py::arg("spec"), py::arg("grid"), py::arg("workers") = 1);
  m.def(
      "time_grid",
      [](double t_min, double t_max, std::size_t steps, bool log) {
        return TimeGrid{t_min, t_max, steps, log ? Spacing::Log : Spacing::Linear}.points();
      },
      py::arg("t_min"), py::arg("t_max"), py::arg("steps"), py::arg("log") = true);
  m.def(
      "default_grid", [](const SpectralDecomposition& s) { return default_grid(s.fiedler()).points(); },
      py::arg("spec"));

  m.def("short_asymptote", &short_asymptote, py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def("long_asymptote", &long_asymptote, py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def(
      "gamma_ratio",
      [](const SpectralDecomposition& s, const std::string& regime, double t) {
        if (regime != "short" && regime != "long") {
          throw std::invalid_argument("regime must be 'short' or 'long'");
        }
        return gamma_ratio(s, regime == "short" ? Regime::Short : Regime::Long, t);
      },
      py::arg("spec"), py::arg("regime"), py::arg("t"));
  m.def("delta", &delta, py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def("delta_at_argmax", &delta_at_argmax, py::arg("spec"), py::arg("t"));

  py::class_<AsymptoticsReport>(m, "AsymptoticsReport")
      .def_readonly("short_value", &AsymptoticsReport::short_value)
      .def_readonly("long_value", &AsymptoticsReport::long_value)
      .def_readonly("gamma_s", &AsymptoticsReport::gamma_s)
      .def_readonly("gamma_l", &AsymptoticsReport::gamma_l)
      .def_readonly("delta", &AsymptoticsReport::delta);
  m.def("asymptotics", &asymptotics, py::arg("spec"), py::arg("j"), py::arg("t"));

  py::class_<OptimalitySample>(m, "OptimalitySample")
      .def_readonly("sample", &OptimalitySample::sample)
      .def_readonly("t", &OptimalitySample::t)
      .def_readonly("fidelity", &OptimalitySample::fidelity)
      .def_readonly("localized_minimum", &OptimalitySample::localized_minimum)
      .def_readonly("margin", &OptimalitySample::margin);
  py::class_<OptimalityReport>(m, "OptimalityReport")
      .def_readonly("worst_violation", &OptimalityReport::worst_violation)
      .def_readonly("localized_mismatch", &OptimalityReport::localized_mismatch)
      .def_readonly("margins", &OptimalityReport::margins);
  m.def(
      "verify_localized_optimality",
      [](const SpectralDecomposition& s, std::size_t n_samples, const std::vector<double>& times,
         std::uint64_t seed) { return verify_localized_optimality(s, n_samples, times, seed); },
      py::arg("spec"), py::arg("n_samples"), py::arg("t_values"), py::arg("seed") = 0);
  m.def(
      "run_verify_suite",
      [](std::size_t n_max, std::size_t samples, std::uint64_t seed) {
        VerifyOptions options;
        options.n_max = n_max;
        options.samples = samples;
        options.seed = seed;
        std::ostringstream log;
        const auto result = run_verify_suite(options, log);
        return py::make_tuple(result.passed, result.worst_margin, result.localized_mismatch,
                              log.str());
      },
      py::arg("n_max") = 8, py::arg("samples") = 200, py::arg("seed") = 0);
}
