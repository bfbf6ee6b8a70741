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

#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsa/circuit.hpp"
#include "bsa/gate_set.hpp"
#include "bsa/simulator.hpp"
#include "bsa/wires.hpp"

namespace bsa {

// ---------------------------------------------------------------------------
// Symmetric templates

enum class SlotKind { SP1, AX1, Theta, Cnot, AX2, SP2 };

/// One event on the target line. `index` is the 0-based theta slot for
/// Theta and the 1-based control number for Cnot.
struct Slot {
  SlotKind kind;
  int index = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Template {
  int n_qubits = 0;
  WireAssignment wires;
  std::vector<Slot> slots;

  int n_cnot() const;
  int n_theta() const;
  /// Controls hit by the CNOTs, in order (1-based control numbers).
  std::vector<int> cnot_schedule() const;
};

/// Control order of the CNOTs for `n_controls` controls: [1] for one
/// control, otherwise the schedule of controls 2..k, then control 1, then
/// the same schedule again (c2 c1 c2, c3 c2 c3 c1 c3 c2 c3, ...).
std::vector<int> cnot_schedule(int n_controls);

/// SP1, AX1, theta_1, CNOT, theta_2, ..., theta_m, AX2, SP2 for 2 <= n <= 5.
Template make_template(int n_qubits);

/// sign[x][j] = (-1)^(number of active CNOTs after theta slot j) for the
/// control assignment x (bit k = control_{k+1}).
std::vector<std::vector<int>> sign_matrix(const Template& t);

// ---------------------------------------------------------------------------
// Gate-set narrowing

enum class Segment { Semicircles, Quadrants, Octants };

struct NarrowingResult {
  GateSet ctg3;
  std::set<Segment> seg1;
  bool seg1_arbitrary = false;
  /// Discrete angles the theta solver may use, ordered by value.
  std::vector<Angle> candidates;
};

/// Admissible target rotations for a template with n_cnot CNOTs:
///   1  -> {S, Sdg, T, Tdg} on quadrants and octants
///   2  -> RZ with |theta| <= pi/3
///   3  -> {T, Tdg} on octants
///   >3 -> RZ with |theta| <= pi/(n_cnot + 1)
/// Continuous families are discretised to +-pi/2^k with 2^k the smallest
/// power of two >= n_cnot + 1.
NarrowingResult narrow_gate_set(int n_cnot);

// ---------------------------------------------------------------------------
// Theta solving

enum class Superposition { H, SX, SXdg };
enum class Auxiliary { I, Z, MinusZ };

std::string to_string(Superposition s);
std::string to_string(Auxiliary a);

struct ThetaAssignment {
  std::vector<Angle> thetas;
  Auxiliary ax2 = Auxiliary::I;
  Superposition sp1 = Superposition::H;
  Superposition sp2 = Superposition::H;

  /// "T† T T† T" style rendering (RZ(a) for unnamed angles).
  std::string thetas_to_string() const;
  friend bool operator==(const ThetaAssignment&, const ThetaAssignment&) = default;
};

enum class BooleanOp { Toffoli, And, Nand, Or, Nor, Implication, Inhibition };

/// Truth table of a named operator. Implication is (not a) or b and
/// Inhibition is not((not a) or b), with a = control_1 and b = control_2;
/// both need exactly two controls.
TruthTable truth_table(BooleanOp op, int n_controls);

/// Parses "FFFT" or "0001" (row 0 first). The length must be a power of
/// two of at least 2. Throws SynthesisError.
TruthTable parse_truth_table(std::string_view text);

struct BooleanSpec {
  std::optional<BooleanOp> op;
  TruthTable table;

  static BooleanSpec named(BooleanOp op, int n_controls) { return {op, truth_table(op, n_controls)}; }
  static BooleanSpec from_table(TruthTable table) { return {std::nullopt, std::move(table)}; }
};

/// Searches theta values from `candidates` and AX2 in {I, pi} such that for
/// every row x: sum_j sign[x][j] * theta_j + ax2 == row_phases[x] (mod 2pi).
///
/// Enumeration is deterministic: the last theta slot is the most
/// significant digit, candidates are tried from the largest value down,
/// and AX2 = I is tried before pi. The first hit wins. With
/// allow_ax2 = false only AX2 = I is considered. A returned pi is reported
/// as Auxiliary::Z.
std::optional<ThetaAssignment> solve_phases(const Template& t, std::span<const Angle> row_phases,
                                            std::span<const Angle> candidates, bool allow_ax2 = true);

/// Exact check of the mod-2pi system above.
bool satisfies(const Template& t, const ThetaAssignment& a, std::span<const Angle> row_phases);

/// Boolean solve over the candidates of narrow_gate_set(t.n_cnot()): row
/// phases are pi * f(x). A pi auxiliary gets its sign (Z or -Z, a global
/// phase) so that the simulated output amplitude of the least frequent
/// output row lies in the upper half plane. Throws SynthesisError
/// ("unsatisfiable in CTG3") when nothing fits.
ThetaAssignment solve_thetas(const Template& t, const BooleanSpec& spec);

/// Gates of the template in circuit form: H, then one Z rotation per theta
/// (named T/S/Z when possible, RZ otherwise, RZ(0) for zero), CX from each
/// scheduled control, Z for a pi auxiliary, H.
Circuit instantiate(const Template& t, const ThetaAssignment& a);

// ---------------------------------------------------------------------------
// Operator library

enum class OperatorKind { Toffoli, And, Nand, Or, Nor, Implication, Inhibition, CV, CVdg, Fredkin, Miller };

std::string to_string(OperatorKind kind);
/// Case-insensitive; accepts e.g. "toffoli", "and", "cv", "cvdg", "fredkin".
std::optional<OperatorKind> parse_operator(std::string_view name);
std::optional<BooleanOp> boolean_op(OperatorKind kind);
/// Inclusive qubit-count range synth accepts for the kind.
std::pair<int, int> supported_range(OperatorKind kind);

struct SynthesisResult {
  OperatorKind kind;
  int n_qubits;
  Circuit circuit;
  /// Template and assignment for single-template operators.
  std::optional<Template> templ;
  std::optional<ThetaAssignment> assignment;
  /// Comment lines recording how the circuit was built.
  std::vector<std::string> provenance;
};

/// Builds and verifies the operator. Throws SynthesisError for unsupported
/// (kind, n) and for a failed self-check.
SynthesisResult synth(OperatorKind kind, int n_qubits);

/// Circuit for an explicit truth table on the n-qubit template.
SynthesisResult synth_truth_table(const TruthTable& table);

struct Verification {
  bool ok = false;
  std::string detail;
};

/// Exhaustive basis-state check against the operator's behaviour:
///  - Boolean kinds: truth table on standard wires, target starting in |0>.
///  - CV / CVdg: with the target in |0>, the all-ones control input leaves
///    the target in SX|0> (SXdg|0>) and every other input leaves it in |0>,
///    each up to phase.
///  - Fredkin / Miller: basis permutation equals the reference permutation
///    (relative phases ignored).
Verification verify_operator(const Circuit& c, OperatorKind kind, int n_qubits);
Verification verify_truth_table(const Circuit& c, const TruthTable& expected);

/// Reference permutation for Fredkin (n = 3, 4) and Miller (n = 4).
std::vector<std::uint64_t> reference_permutation(OperatorKind kind, int n_qubits);

}  // namespace bsa
