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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bsa/gate.hpp"

namespace bsa {

/// An ordered gate list over n_qubits logical qubits. Gates apply left to
/// right.
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);
  Circuit(std::size_t n_qubits, std::initializer_list<Gate> gates);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends after checking qubit indices; throws CircuitError.
  Circuit& add(const Gate& g);
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
};

/// Reversed order with every gate replaced by its adjoint.
Circuit circuit_inverse(const Circuit& c);

/// Relabels qubit i of `c` to wires[i] inside a circuit of n_qubits qubits.
Circuit remap(const Circuit& c, std::span<const Qubit> wires, std::size_t n_qubits);

}  // namespace bsa
