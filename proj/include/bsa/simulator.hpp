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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsa/circuit.hpp"

namespace bsa {

using Complex = std::complex<double>;

/// Widest circuit unitary_of will build (2^10 x 2^10).
inline constexpr std::size_t kMaxUnitaryQubits = 10;
inline constexpr std::size_t kMaxStateQubits = 20;

/// Amplitudes indexed little-endian: bit q of the index is qubit q.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(std::size_t n_qubits);
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm_squared() const;

  void apply(const Gate& g);

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Dense 2^n x 2^n matrix.
class UnitaryMatrix {
 public:
  static UnitaryMatrix identity(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const { return data_[col * dim_ + row]; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[col * dim_ + row]; }

  /// Left-multiplies by the gate (the gate is applied after the current
  /// contents).
  void apply(const Gate& g);

  UnitaryMatrix adjoint() const;
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
  std::vector<Complex> operator*(std::span<const Complex> v) const;

  /// max |U U^dagger - I| elementwise.
  double unitarity_error() const;

  static UnitaryMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

 private:
  UnitaryMatrix(std::size_t n_qubits, std::size_t dim) : n_qubits_(n_qubits), dim_(dim), data_(dim * dim) {}

  std::size_t n_qubits_;
  std::size_t dim_;
  std::vector<Complex> data_;  // column-major
};

/// 2x2 matrix of a single-qubit gate, row-major. RZ(a) is
/// diag(e^{-ia/2}, e^{ia/2}); Z, S and T are diag(1, e^{ia}).
std::array<Complex, 4> single_qubit_matrix(const Gate& g);

/// Product of the gate matrices in application order.
UnitaryMatrix unitary_of(const Circuit& c);

/// Gate-by-gate simulation. Throws SimulationError on a width mismatch.
StateVector apply(const Circuit& c, StateVector s);

/// lambda with |lambda| = 1 and max|U - lambda V| <= tol, if one exists.
/// lambda is read off the largest-magnitude entry of V.
std::optional<Complex> global_phase_between(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol);
bool equiv_up_to_global_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol);

enum class Pauli { X, Y, Z };

struct SignedPauli {
  int sign = 1;
  Pauli pauli = Pauli::Z;
  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

std::string to_string(const SignedPauli& p);

/// C P C^dagger identified as +-X, +-Y or +-Z to within 1e-10. Throws
/// SimulationError if C is not a single-qubit Clifford.
SignedPauli clifford_conjugate(const Circuit& clifford, Pauli p);

// ---------------------------------------------------------------------------
// Equator phase tracking

/// One event on the target line. `phase` is the equator phase after the
/// event: the state (|0> + e^{i phase}|1>)/sqrt(2), global phase dropped.
struct TraceEvent {
  enum class Kind { Rotation, Cnot, ControlledZ };

  Kind kind;
  std::size_t gate_index;  // position in the circuit
  Qubit control = 0;       // for Cnot / ControlledZ
  bool active = true;      // control bit was 1 (always true for rotations)
  Angle phase;
};

/// Tracks the target's equator phase for the computational basis input
/// `input` (bit q = qubit q; the target bit must be 0).
///
/// The first gate on the target must be H (leaving phase 0) and the last
/// must be H; neither is reported. Z rotations add their angle, an active
/// CX from a control negates the phase, an inactive one is reported with
/// the phase unchanged. Anything else touching the target, or any gate on
/// a control, raises SimulationError("not equator-trackable").
std::vector<TraceEvent> phase_track(const Circuit& c, Qubit target, std::uint64_t input);

/// Output of the closing H: phase 0 -> false, phase pi -> true.
std::optional<bool> equator_output(Angle phase);

// ---------------------------------------------------------------------------
// Boolean behaviour

/// Boolean output per control assignment. Index bit k is control_{k+1}, so
/// control_1 is the least significant bit.
struct TruthTable {
  int n_controls = 0;
  std::vector<bool> outputs;

  static TruthTable from_bits(int n_controls, std::uint64_t bits);
  TruthTable complement() const;
  /// Outputs for index 0, 1, ... as 'F'/'T' characters.
  std::string to_string() const;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// Runs every control assignment with the target in |0>. Throws
/// SimulationError("not a Boolean operator") if the target ends in a
/// superposition or a control changes.
TruthTable boolean_action(const Circuit& c, Qubit target, std::span<const Qubit> controls);
/// Same, with the wires of standard_wires(n_controls + 1).
TruthTable boolean_action(const Circuit& c, int n_controls);

/// Basis permutation realised by c, if every basis state maps to a single
/// basis state (amplitude modulus within tol of 1). Relative phases are
/// ignored.
std::optional<std::vector<std::uint64_t>> basis_permutation(const Circuit& c, double tol = 1e-9);

}  // namespace bsa
