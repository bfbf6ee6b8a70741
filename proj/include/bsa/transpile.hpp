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

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "bsa/circuit.hpp"

namespace bsa {

/// Target gate basis. Membership is by kind; RZ and RX accept any angle.
class NativeBasis {
 public:
  NativeBasis() = default;
  NativeBasis(std::string name, std::set<GateKind> single_qubit, std::set<GateKind> two_qubit);

  /// {I, X, RX, SX, RZ} and {CZ}.
  static NativeBasis ibm_default();
  /// Lines "single <mnemonic>" or "two <mnemonic>"; '#' starts a comment.
  static NativeBasis parse(std::string_view text, std::string name = "custom");
  static NativeBasis load(const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  const std::set<GateKind>& single_qubit() const { return single_; }
  const std::set<GateKind>& two_qubit() const { return two_; }
  bool contains(GateKind kind) const;
  bool contains(const Gate& g) const { return contains(g.kind); }

 private:
  std::string name_;
  std::set<GateKind> single_;
  std::set<GateKind> two_;
};

/// Expands every non-member gate through the fixed rule table, recursively,
/// until only basis gates remain:
///   H -> RZ(pi/2) SX RZ(pi/2)      S, Sdg, T, Tdg, Z -> RZ
///   Y -> RZ(pi) X                  SXdg -> RZ(pi) SX RZ(pi)
///   X -> SX SX                     RX(a) -> H RZ(a) H
///   I -> (nothing)                 CX(c,t) -> H(t) CZ(c,t) H(t)
///   CZ(a,b) -> H(b) CX(a,b) H(b)   SWAP(a,b) -> CX(a,b) CX(b,a) CX(a,b)
/// The result equals the input up to global phase. Throws TranspileError
/// naming the gate when a kind has no rule chain into the basis.
Circuit rewrite_to_basis(const Circuit& c, const NativeBasis& basis = NativeBasis::ibm_default());

/// Merges runs of RZ on the same wire (exact addition), drops RZ(0) and I.
/// Nothing moves across another gate on the wire.
Circuit canonicalize(const Circuit& c);

struct GateCounts {
  int n1 = 0;  // single-qubit gates
  int n2 = 0;  // two-qubit gates
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Throws TranspileError on a gate outside the basis.
GateCounts count_gates(const Circuit& c, const NativeBasis& basis = NativeBasis::ibm_default());

}  // namespace bsa
