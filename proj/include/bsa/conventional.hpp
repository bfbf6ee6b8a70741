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

#include <span>

#include "bsa/circuit.hpp"
#include "bsa/synth.hpp"

namespace bsa {

/// Appends a multi-controlled X^exponent (exponent = fraction of a half
/// turn, so 1 is X and 1/2 is SX). Two controls with exponent 1 use the
/// six-CNOT Clifford+T Toffoli; otherwise the circuit recurses on one
/// control fewer with square roots, bottoming out in a controlled phase
/// conjugated by H. Exact up to global phase.
void append_controlled_xpow(Circuit& c, std::span<const Qubit> controls, Qubit target, Angle exponent);

/// Textbook decomposition of the operator on the standard wires, built
/// without looking at the coupling graph. Same wire roles as synth().
Circuit conventional_circuit(OperatorKind kind, int n_qubits);

}  // namespace bsa
