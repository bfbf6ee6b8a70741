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

#include "bsa/gate.hpp"

#include "bsa/error.hpp"

namespace bsa {

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
      return 2;
    default:
      return 1;
  }
}

bool has_angle(GateKind kind) { return kind == GateKind::RZ || kind == GateKind::RX; }

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "i";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::SXdg: return "sxdg";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

std::optional<GateKind> kind_from_mnemonic(std::string_view text) {
  for (GateKind k : kAllGateKinds) {
    if (mnemonic(k) == text) return k;
  }
  return std::nullopt;
}

bool is_z_rotation(GateKind kind) {
  switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
      return true;
    default:
      return false;
  }
}

Gate Gate::single(GateKind kind, Qubit q) {
  if (bsa::arity(kind) != 1) throw CircuitError("gate '" + std::string(mnemonic(kind)) + "' needs two qubits");
  return Gate{kind, {q, 0}, Angle{}};
}

Gate Gate::cx(Qubit control, Qubit target) { return Gate{GateKind::CX, {control, target}, Angle{}}; }
Gate Gate::cz(Qubit a, Qubit b) { return Gate{GateKind::CZ, {a, b}, Angle{}}; }
Gate Gate::swap(Qubit a, Qubit b) { return Gate{GateKind::SWAP, {a, b}, Angle{}}; }

std::optional<Angle> Gate::z_rotation() const {
  switch (kind) {
    case GateKind::Z: return Angle::pi();
    case GateKind::S: return Angle::fraction(1, 2);
    case GateKind::Sdg: return Angle::fraction(-1, 2);
    case GateKind::T: return Angle::fraction(1, 4);
    case GateKind::Tdg: return Angle::fraction(-1, 4);
    case GateKind::RZ: return angle;
    default: return std::nullopt;
  }
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  if (has_angle(a.kind) && a.angle != b.angle) return false;
  if (a.arity() == 1) return a.qubits[0] == b.qubits[0];
  if (a.qubits == b.qubits) return true;
  const bool symmetric = a.kind == GateKind::CZ || a.kind == GateKind::SWAP;
  return symmetric && a.qubits[0] == b.qubits[1] && a.qubits[1] == b.qubits[0];
}

Gate adjoint(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::SX: out.kind = GateKind::SXdg; break;
    case GateKind::SXdg: out.kind = GateKind::SX; break;
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::RZ:
    case GateKind::RX: out.angle = -g.angle; break;
    default: break;
  }
  return out;
}

Gate z_rotation_gate(Angle a, Qubit q) {
  if (a == Angle::pi()) return Gate::single(GateKind::Z, q);
  if (a == Angle::fraction(1, 2)) return Gate::single(GateKind::S, q);
  if (a == Angle::fraction(-1, 2)) return Gate::single(GateKind::Sdg, q);
  if (a == Angle::fraction(1, 4)) return Gate::single(GateKind::T, q);
  if (a == Angle::fraction(-1, 4)) return Gate::single(GateKind::Tdg, q);
  return Gate::rz(a, q);
}

std::string to_string(const Gate& g) {
  std::string out(mnemonic(g.kind));
  if (has_angle(g.kind)) out += " " + g.angle.to_fraction();
  out += " " + std::to_string(g.qubits[0]);
  if (g.arity() == 2) out += " " + std::to_string(g.qubits[1]);
  return out;
}

}  // namespace bsa
