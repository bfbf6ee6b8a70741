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

#include "bsa/conventional.hpp"

#include <vector>

#include "bsa/error.hpp"
#include "bsa/wires.hpp"

namespace bsa {

namespace {

Angle half(const Angle& a) { return Angle::fraction(a.numerator(), a.denominator() * 2); }

void append_toffoli(Circuit& c, Qubit c1, Qubit c2, Qubit t) {
  using K = GateKind;
  const auto one = [](K k, Qubit q) { return Gate::single(k, q); };
  for (const Gate& g : {one(K::H, t), Gate::cx(c2, t), one(K::Tdg, t), Gate::cx(c1, t), one(K::T, t), Gate::cx(c2, t),
                        one(K::Tdg, t), Gate::cx(c1, t), one(K::T, c2), one(K::T, t), one(K::H, t), Gate::cx(c1, c2),
                        one(K::T, c1), one(K::Tdg, c2), Gate::cx(c1, c2)}) {
    c.add(g);
  }
}

}  // namespace

void append_controlled_xpow(Circuit& c, std::span<const Qubit> controls, Qubit target, Angle exponent) {
  if (controls.empty()) throw CircuitError("controlled gate needs a control");
  if (exponent.is_zero()) return;
  const std::size_t k = controls.size();
  if (k == 1) {
    const Qubit ctl = controls[0];
    const Angle h = half(exponent);
    c.add(Gate::single(GateKind::H, target));
    c.add(Gate::rz(h, ctl)).add(Gate::cx(ctl, target)).add(Gate::rz(-h, target));
    c.add(Gate::cx(ctl, target)).add(Gate::rz(h, target));
    c.add(Gate::single(GateKind::H, target));
    return;
  }
  if (k == 2 && exponent == Angle::pi()) {
    append_toffoli(c, controls[0], controls[1], target);
    return;
  }
  const Angle root = half(exponent);
  const Qubit last = controls[k - 1];
  const auto rest = controls.first(k - 1);
  const std::vector<Qubit> single{last};
  append_controlled_xpow(c, single, target, root);
  append_controlled_xpow(c, rest, last, Angle::pi());
  append_controlled_xpow(c, single, target, -root);
  append_controlled_xpow(c, rest, last, Angle::pi());
  append_controlled_xpow(c, rest, target, root);
}

Circuit conventional_circuit(OperatorKind kind, int n_qubits) {
  const auto [lo, hi] = supported_range(kind);
  if (n_qubits < lo || n_qubits > hi) {
    throw SynthesisError("unsupported operator size: " + to_string(kind) + " with " + std::to_string(n_qubits) + " qubits");
  }
  const std::size_t n = static_cast<std::size_t>(n_qubits);
  Circuit c(n);
  const auto x = [&](Qubit q) { c.add(Gate::single(GateKind::X, q)); };
  if (kind == OperatorKind::Miller) {
    Circuit tof(3);
    append_controlled_xpow(tof, std::vector<Qubit>{0, 2}, 1, Angle::pi());
    const std::vector<Qubit> wa{0, 1, 2};
    const std::vector<Qubit> wb{1, 2, 3};
    const Circuit a = remap(tof, wa, 4);
    c.append(a).append(remap(tof, wb, 4)).append(circuit_inverse(a));
    return c;
  }
  const WireAssignment w = standard_wires(n_qubits);
  const Qubit t = w.target;
  const auto& ctl = w.controls;
  const auto mcx = [&] { append_controlled_xpow(c, ctl, t, Angle::pi()); };
  switch (kind) {
    case OperatorKind::Toffoli:
    case OperatorKind::And: mcx(); break;
    case OperatorKind::Nand:
      mcx();
      x(t);
      break;
    case OperatorKind::Or:
      for (Qubit q : ctl) x(q);
      mcx();
      for (Qubit q : ctl) x(q);
      x(t);
      break;
    case OperatorKind::Nor:
      for (Qubit q : ctl) x(q);
      mcx();
      for (Qubit q : ctl) x(q);
      break;
    case OperatorKind::Implication:
    case OperatorKind::Inhibition:
      // a AND NOT b, negated for implication.
      x(ctl[1]);
      mcx();
      x(ctl[1]);
      if (kind == OperatorKind::Implication) x(t);
      break;
    case OperatorKind::CV: append_controlled_xpow(c, ctl, t, Angle::fraction(1, 2)); break;
    case OperatorKind::CVdg: append_controlled_xpow(c, ctl, t, Angle::fraction(-1, 2)); break;
    case OperatorKind::Fredkin: {
      const Qubit t1 = ctl.back();
      c.add(Gate::cx(t, t1));
      mcx();
      c.add(Gate::cx(t, t1));
      break;
    }
    case OperatorKind::Miller: break;
  }
  return c;
}

}  // namespace bsa
