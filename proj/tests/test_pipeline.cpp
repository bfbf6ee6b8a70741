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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "bsa/conventional.hpp"
#include "bsa/error.hpp"
#include "bsa/pipeline.hpp"
#include "bsa/report.hpp"
#include "bsa/simulator.hpp"
#include "bsa/synth.hpp"
#include "oracle.hpp"

namespace bsa {
namespace {

using OK = OperatorKind;

Layout torino() { return Layout::load(BSA_DATA_DIR "/ibm_torino.layout"); }

const OK kLibrary[] = {OK::Toffoli, OK::And,         OK::Nand,       OK::Or, OK::Nor,     OK::Implication,
                       OK::Inhibition, OK::CV,       OK::CVdg,       OK::Fredkin, OK::Miller};

TEST(Pipeline, LibraryNeedsNoSwaps) {
  const Layout heavy = torino();
  const Layout grid = Layout::grid(3, 3);
  for (OK k : kLibrary) {
    const auto [lo, hi] = supported_range(k);
    for (int n = lo; n <= hi; ++n) {
      const Layout& l = n == 5 ? grid : heavy;
      const CostResult r = evaluate_cost(synth(k, n).circuit, l, std::nullopt);
      EXPECT_EQ(r.report.counts.xc, 0) << to_string(k) << n;
      EXPECT_EQ(r.swaps, 0);
    }
  }
}

TEST(Pipeline, ControlledRootTwoQubits) {
  const CostResult r = evaluate_cost(synth(OK::CV, 2).circuit, torino(), std::nullopt);
  EXPECT_EQ(r.report.counts.n2, 1);
  EXPECT_EQ(r.report.counts.xc, 0);
  EXPECT_DOUBLE_EQ(r.report.wtqc, wtqc(r.report.counts, Weights{}));
}

TEST(Pipeline, ZeroWeights) {
  CostOptions opts;
  opts.weights = Weights{0, 0, 0, 0};
  EXPECT_EQ(evaluate_cost(synth(OK::And, 3).circuit, torino(), std::nullopt, opts).report.wtqc, 0.0);
}

TEST(Pipeline, ExplicitMappingAndXcModes) {
  const Layout l = Layout::path(5);
  const Circuit c(3, {Gate::cx(0, 2)});
  const Mapping spread{{0, 1, 4}};
  const CostResult swaps = evaluate_cost(c, l, spread);
  EXPECT_EQ(swaps.swaps, 3);
  EXPECT_EQ(swaps.report.counts.xc, 3);
  EXPECT_EQ(swaps.report.counts.n2, 1);
  CostOptions opts;
  opts.xc_mode = XcMode::Cnots;
  const CostResult cnots = evaluate_cost(c, l, spread, opts);
  EXPECT_EQ(cnots.report.counts.xc, 9);
  EXPECT_EQ(cnots.report.counts.n2, 1);
  EXPECT_EQ(cnots.report.counts.d, swaps.report.counts.d);
  EXPECT_THROW(evaluate_cost(c, l, Mapping{{0, 0, 1}}), LayoutError);
}

TEST(Pipeline, PhysicalCircuitIsEquivalent) {
  const Layout l = Layout::path(4);
  for (OK k : {OK::Toffoli, OK::Or, OK::Fredkin}) {
    const Circuit c = synth(k, 3).circuit;
    const CostResult r = evaluate_cost(c, l, Mapping{{0, 1, 2}});
    Circuit embedded(4);
    embedded.append(c);
    EXPECT_LT(oracle::phase_insensitive_diff(oracle::circuit_matrix(r.physical), oracle::circuit_matrix(embedded)),
              1e-9)
        << to_string(k);
  }
}

TEST(Conventional, CircuitsImplementTheirOperators) {
  for (OK k : kLibrary) {
    const auto [lo, hi] = supported_range(k);
    for (int n = lo; n <= std::min(hi, 4); ++n) {
      const Circuit c = conventional_circuit(k, n);
      EXPECT_TRUE(verify_operator(c, k, n).ok) << to_string(k) << n << ": " << verify_operator(c, k, n).detail;
    }
  }
}

TEST(Conventional, ControlledPowerMatchesOracle) {
  // Exact multi-controlled X^t, compared against the textbook block matrix.
  for (int k = 1; k <= 3; ++k) {
    for (const Angle& e : {Angle::pi(), Angle::fraction(1, 2), Angle::fraction(-1, 2)}) {
      Circuit c(static_cast<std::size_t>(k + 1));
      std::vector<Qubit> controls;
      for (int i = 0; i < k; ++i) controls.push_back(static_cast<Qubit>(i));
      append_controlled_xpow(c, controls, static_cast<Qubit>(k), e);
      const double t = e.radians() / oracle::kPi;
      const oracle::C phase = std::exp(oracle::C(0, oracle::kPi * t));
      const oracle::C a = (1.0 + phase) / 2.0;
      const oracle::C b = (1.0 - phase) / 2.0;
      const std::size_t dim = std::size_t{1} << (k + 1);
      oracle::Matrix want = oracle::identity(dim);
      const std::size_t all = (std::size_t{1} << k) - 1;
      const std::size_t tbit = std::size_t{1} << k;
      want[all][all] = a;
      want[all | tbit][all | tbit] = a;
      want[all][all | tbit] = b;
      want[all | tbit][all] = b;
      EXPECT_LT(oracle::phase_insensitive_diff(oracle::circuit_matrix(c), want), 1e-9) << k << " " << t;
    }
  }
}

TEST(Conventional, ControlledRootUsesTwoCnots) {
  const CostResult r = evaluate_cost(conventional_circuit(OK::CV, 2), torino(), std::nullopt);
  EXPECT_EQ(r.report.counts.n2, 2);
}

const char* kPhaseGolden =
    "|c2 c1>  SP1(H)  θ1(T†)  CNOT2  θ2(T)  CNOT1  θ3(T†)  CNOT2  θ4(T)  SP2(H)  Output\n"
    "----------------------------------------------------------------------------------\n"
    "|0 0>    0       7π/4    –      0      –      7π/4    –      0      |0>     False\n"
    "|0 1>    0       7π/4    –      0      0      7π/4    –      0      |0>     False\n"
    "|1 0>    0       7π/4    π/4    π/2    –      π/4     7π/4   0      |0>     False\n"
    "|1 1>    0       7π/4    π/4    π/2    3π/2   5π/4    3π/4   π      |1>     True\n";

const char* kStateGolden =
    "|c2 c1>  SP1(H)  θ1(T†)  CNOT2  θ2(T)  CNOT1  θ3(T†)  CNOT2  θ4(T)  SP2(H)  Output\n"
    "----------------------------------------------------------------------------------\n"
    "|0 0>    |+>     7π/4    –      |+>    –      7π/4    –      |+>    |0>     False\n"
    "|0 1>    |+>     7π/4    –      |+>    |+>    7π/4    –      |+>    |0>     False\n"
    "|1 0>    |+>     7π/4    π/4    |+i>   –      π/4     7π/4   |+>    |0>     False\n"
    "|1 1>    |+>     7π/4    π/4    |+i>   |-i>   5π/4    3π/4   |->    |1>     True\n";

TEST(Trace, ToffoliGolden) {
  const auto r = synth(OK::Toffoli, 3);
  EXPECT_EQ(render_trace(trace_table(r.circuit, r.templ->wires, TraceStyle::Phases)), kPhaseGolden);
  EXPECT_EQ(render_trace(trace_table(r.circuit, r.templ->wires, TraceStyle::States)), kStateGolden);
  const TraceTable t = trace_table(r.circuit, r.templ->wires);
  EXPECT_EQ(t.outputs, (std::vector<std::optional<bool>>{false, false, false, true}));
}

TEST(Trace, AllZeroThetas) {
  const Template t = make_template(3);
  ThetaAssignment zero;
  zero.thetas.assign(4, Angle::zero());
  const TraceTable table = trace_table(instantiate(t, zero), t.wires);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    EXPECT_EQ(table.outputs[i], false);
    for (std::size_t col = 1; col + 2 < table.rows[i].size(); ++col) {
      const std::string& cell = table.rows[i][col];
      EXPECT_TRUE(cell == "0" || cell == "–") << cell;
    }
  }
}

TEST(Trace, ControlledRootHasNoBooleanOutput) {
  const auto r = synth(OK::CV, 2);
  const TraceTable t = trace_table(r.circuit, r.templ->wires);
  EXPECT_EQ(t.outputs.back(), std::nullopt);
  EXPECT_EQ(t.rows.back().back(), "?");
  EXPECT_THROW(trace_table(synth(OK::Fredkin, 3).circuit, standard_wires(3)), SimulationError);
}

TEST(Trace, StyleNames) {
  EXPECT_EQ(parse_trace_style("phases"), TraceStyle::Phases);
  EXPECT_EQ(parse_trace_style("states"), TraceStyle::States);
  EXPECT_FALSE(parse_trace_style("bloch").has_value());
}

TEST(Report, ReferenceRows) {
  const auto cv = reference_cost(OK::CV, 2);
  ASSERT_TRUE(cv.has_value());
  EXPECT_EQ(cv->bsa, (CostCounts{6, 1, 0, 7}));
  EXPECT_EQ(cv->bsa_wtqc, 14);
  EXPECT_EQ(reference_cost(OK::And, 3)->bsa, (CostCounts{34, 3, 0, 29}));
  EXPECT_EQ(reference_cost(OK::Miller, 4)->bsa, (CostCounts{70, 13, 0, 58}));
  EXPECT_FALSE(reference_cost(OK::Toffoli, 3).has_value());
  // Every stored row is internally consistent under unit weights.
  for (OK k : kLibrary) {
    for (int n = 2; n <= 5; ++n) {
      if (const auto row = reference_cost(k, n)) {
        EXPECT_EQ(wtqc(row->bsa, Weights{}), row->bsa_wtqc) << to_string(k) << n;
        EXPECT_EQ(wtqc(row->conventional, Weights{}), row->conventional_wtqc) << to_string(k) << n;
      }
    }
  }
}

TEST(Report, Formatting) {
  EXPECT_EQ(format_number(14.0), "14");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(display_width("θ1(T†)"), 6u);
  EXPECT_EQ(KeyValueBlock().add("n1", 6).add("wtqc", 14.0).add("op", "cv").str(), "n1=6\nwtqc=14\nop=cv\n");
  EXPECT_EQ(render_columns({"a", "bb"}, {{"ccc", "d"}}), "a    bb\n-------\nccc  d\n");
}

}  // namespace
}  // namespace bsa
