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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bsa/angle.hpp"

namespace bsa {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  I,
  X,
  SX,
  SXdg,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  RZ,
  RX,
  CX,
  CZ,
  SWAP,
};

inline constexpr std::array kAllGateKinds = {
    GateKind::I,   GateKind::X,  GateKind::SX,  GateKind::SXdg, GateKind::Y,  GateKind::Z,
    GateKind::H,   GateKind::S,  GateKind::Sdg, GateKind::T,    GateKind::Tdg, GateKind::RZ,
    GateKind::RX,  GateKind::CX, GateKind::CZ,  GateKind::SWAP,
};

int arity(GateKind kind);
bool has_angle(GateKind kind);
/// Lower-case mnemonic used by the circuit text format.
std::string_view mnemonic(GateKind kind);
std::optional<GateKind> kind_from_mnemonic(std::string_view text);

/// Z, S, Sdg, T, Tdg and RZ: rotations about the Z axis.
bool is_z_rotation(GateKind kind);

/// One gate application. Single-qubit gates use qubits[0]; CX stores
/// (control, target).
struct Gate {
  GateKind kind = GateKind::I;
  std::array<Qubit, 2> qubits{0, 0};
  Angle angle{};

  static Gate single(GateKind kind, Qubit q);
  static Gate rz(Angle a, Qubit q) { return Gate{GateKind::RZ, {q, 0}, a}; }
  static Gate rx(Angle a, Qubit q) { return Gate{GateKind::RX, {q, 0}, a}; }
  static Gate cx(Qubit control, Qubit target);
  static Gate cz(Qubit a, Qubit b);
  static Gate swap(Qubit a, Qubit b);

  int arity() const { return bsa::arity(kind); }
  bool acts_on(Qubit q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }

  /// Rotation about Z carried by a named phase gate or RZ (Z -> pi, S -> pi/2, ...).
  std::optional<Angle> z_rotation() const;

  /// CZ and SWAP compare equal under operand exchange; angles only matter
  /// for RZ and RX.
  friend bool operator==(const Gate& a, const Gate& b);
};

/// Inverse gate: T <-> Tdg, S <-> Sdg, SX <-> SXdg, RZ(a) -> RZ(-a), ...
Gate adjoint(const Gate& g);

/// Named gate for a Z rotation when one exists (pi/4 -> T, -pi/2 -> Sdg,
/// pi -> Z), otherwise RZ.
Gate z_rotation_gate(Angle a, Qubit q);

std::string to_string(const Gate& g);

}  // namespace bsa
