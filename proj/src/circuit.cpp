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

#include "bsa/circuit.hpp"

#include <string>

#include "bsa/error.hpp"

namespace bsa {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw CircuitError("a circuit needs at least one qubit");
}

Circuit::Circuit(std::size_t n_qubits, std::initializer_list<Gate> gates) : Circuit(n_qubits) {
  for (const Gate& g : gates) add(g);
}

Circuit& Circuit::add(const Gate& g) {
  for (int i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= n_qubits_) {
      throw CircuitError("gate '" + to_string(g) + "' references qubit " + std::to_string(g.qubits[i]) +
                         " but the circuit has " + std::to_string(n_qubits_));
    }
  }
  if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
    throw CircuitError("gate '" + to_string(g) + "' uses the same qubit twice");
  }
  Gate stored = g;
  if (g.arity() == 1) stored.qubits[1] = 0;
  if (!has_angle(g.kind)) stored.angle = Angle{};
  gates_.push_back(stored);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) throw CircuitError("appended circuit is wider than the target");
  for (const Gate& g : other.gates_) add(g);
  return *this;
}

Circuit circuit_inverse(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.add(adjoint(*it));
  return out;
}

Circuit remap(const Circuit& c, std::span<const Qubit> wires, std::size_t n_qubits) {
  if (wires.size() < c.n_qubits()) throw CircuitError("remap needs one wire per qubit");
  Circuit out(n_qubits);
  for (Gate g : c.gates()) {
    for (int i = 0; i < g.arity(); ++i) g.qubits[i] = wires[g.qubits[i]];
    out.add(g);
  }
  return out;
}

}  // namespace bsa
