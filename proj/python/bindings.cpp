// Copyright 2026 The bsa-synth Authors
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

// Python bindings for the synthesis, verification and costing entry points.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsa/circuit_io.hpp"
#include "bsa/conventional.hpp"
#include "bsa/error.hpp"
#include "bsa/pipeline.hpp"
#include "bsa/report.hpp"
#include "bsa/simulator.hpp"
#include "bsa/synth.hpp"

namespace py = pybind11;
using namespace bsa;

namespace {

OperatorKind op_from(const std::string& name) {
  const auto kind = parse_operator(name);
  if (!kind) throw Error("unknown operator '" + name + "'");
  return *kind;
}

py::dict cost_dict(const CostResult& r) {
  py::dict d;
  d["n1"] = r.report.counts.n1;
  d["n2"] = r.report.counts.n2;
  d["xc"] = r.report.counts.xc;
  d["d"] = r.report.counts.d;
  d["wtqc"] = r.report.wtqc;
  d["swaps"] = r.swaps;
  d["mapping"] = r.initial_mapping.physical;
  d["final_mapping"] = r.final_mapping.physical;
  return d;
}

Layout layout_from(const std::optional<std::string>& path, const std::optional<std::pair<int, int>>& heavy_hex) {
  if (path && heavy_hex) throw Error("give at most one of layout and heavy_hex");
  if (heavy_hex) return Layout::heavy_hex(heavy_hex->first, heavy_hex->second);
  if (!path) throw Error("a layout file or heavy_hex shape is required");
  return Layout::load(*path);
}

}  // namespace

PYBIND11_MODULE(_bsa, m) {
  m.doc() = "Bloch sphere approach gate synthesis";

  auto base = py::register_exception<Error>(m, "BsaError", PyExc_RuntimeError);
  (void)base;

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def("__len__", &Circuit::size)
      .def("gates", [](const Circuit& c) {
        std::vector<std::string> out;
        for (const Gate& g : c.gates()) out.push_back(to_string(g));
        return out;
      })
      .def("to_text", [](const Circuit& c) { return emit_circuit(c); })
      .def("unitary", [](const Circuit& c) {
        const UnitaryMatrix u = unitary_of(c);
        const auto dim = static_cast<py::ssize_t>(u.dimension());
        py::array_t<std::complex<double>> arr({dim, dim});
        auto view = arr.mutable_unchecked<2>();
        for (py::ssize_t r = 0; r < dim; ++r) {
          for (py::ssize_t col = 0; col < dim; ++col) view(r, col) = u(static_cast<std::size_t>(r), static_cast<std::size_t>(col));
        }
        return arr;
      })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit " + std::to_string(c.n_qubits()) + " qubits, " + std::to_string(c.size()) + " gates>";
      });

  m.def("parse_circuit", [](const std::string& text) { return parse_circuit(text); }, py::arg("text"));

  m.def(
      "synth",
      [](const std::string& op, int n) {
        const SynthesisResult r = synth(op_from(op), n);
        py::dict d;
        d["circuit"] = r.circuit;
        d["provenance"] = r.provenance;
        if (r.assignment) {
          std::vector<std::string> thetas;
          for (const Angle& a : r.assignment->thetas) thetas.push_back(a.to_fraction());
          d["thetas"] = thetas;
          d["theta_names"] = r.assignment->thetas_to_string();
          d["ax2"] = to_string(r.assignment->ax2);
        }
        return d;
      },
      py::arg("op"), py::arg("n"), "Synthesize and self-check an operator.");

  m.def(
      "synth_truth_table", [](const std::string& table) { return synth_truth_table(parse_truth_table(table)).circuit; },
      py::arg("table"), "Circuit for an explicit truth table such as 'FFFT'.");

  m.def(
      "conventional", [](const std::string& op, int n) { return conventional_circuit(op_from(op), n); }, py::arg("op"),
      py::arg("n"), "Textbook decomposition used as the comparison baseline.");

  m.def(
      "truth_table", [](const Circuit& c, int n_controls) { return boolean_action(c, n_controls).to_string(); },
      py::arg("circuit"), py::arg("n_controls"));

  m.def(
      "verify",
      [](const Circuit& c, const std::string& op, int n) {
        const Verification v = verify_operator(c, op_from(op), n);
        return py::make_tuple(v.ok, v.detail);
      },
      py::arg("circuit"), py::arg("op"), py::arg("n"));

  m.def(
      "trace",
      [](const Circuit& c, const std::string& style) {
        const auto s = parse_trace_style(style);
        if (!s) throw Error("unknown trace style '" + style + "'");
        return render_trace(trace_table(c, standard_wires(static_cast<int>(c.n_qubits())), *s));
      },
      py::arg("circuit"), py::arg("style") = "phases");

  m.def("lower", [](const Circuit& c) { return canonicalize(rewrite_to_basis(c)); }, py::arg("circuit"),
        "Rewrite into the default native basis and canonicalize.");

  m.def(
      "cost",
      [](const Circuit& c, std::optional<std::string> layout, std::optional<std::pair<int, int>> heavy_hex,
         std::optional<std::vector<PhysicalId>> mapping, std::tuple<double, double, double, double> weights,
         const std::string& xc_mode) {
        CostOptions opts;
        opts.weights = {std::get<0>(weights), std::get<1>(weights), std::get<2>(weights), std::get<3>(weights)};
        const auto mode = parse_xc_mode(xc_mode);
        if (!mode) throw Error("xc_mode must be 'swaps' or 'cnots'");
        opts.xc_mode = *mode;
        std::optional<Mapping> m;
        if (mapping) m = Mapping{*mapping};
        return cost_dict(evaluate_cost(c, layout_from(layout, heavy_hex), m, opts));
      },
      py::arg("circuit"), py::arg("layout") = py::none(), py::arg("heavy_hex") = py::none(), py::arg("mapping") = py::none(),
      py::arg("weights") = std::make_tuple(1.0, 1.0, 1.0, 1.0), py::arg("xc_mode") = "swaps");

  m.def(
      "wtqc",
      [](std::tuple<int, int, int, int> counts, std::tuple<double, double, double, double> weights) {
        return wtqc({std::get<0>(counts), std::get<1>(counts), std::get<2>(counts), std::get<3>(counts)},
                    {std::get<0>(weights), std::get<1>(weights), std::get<2>(weights), std::get<3>(weights)});
      },
      py::arg("counts"), py::arg("weights") = std::make_tuple(1.0, 1.0, 1.0, 1.0));
}
