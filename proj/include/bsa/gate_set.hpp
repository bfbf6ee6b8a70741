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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsa/gate.hpp"

namespace bsa {

/// Non-negative bound numerator/denominator * pi; need not be dyadic.
struct PiFraction {
  std::int64_t numerator;
  std::int64_t denominator;
};

/// Membership pattern. A bounded RZ pattern admits every Z rotation (named
/// or RZ) with |angle| <= max_abs; an unbounded pattern admits exactly its
/// kind.
struct GatePattern {
  GateKind kind;
  std::optional<PiFraction> max_abs;

  bool matches(const Gate& g) const;
};

class GateSet {
 public:
  GateSet() = default;
  GateSet(std::string name, std::vector<GatePattern> patterns)
      : name_(std::move(name)), patterns_(std::move(patterns)) {}

  const std::string& name() const { return name_; }
  const std::vector<GatePattern>& patterns() const { return patterns_; }

  bool contains(const Gate& g) const;
  /// True when some pattern admits this kind with at least one angle.
  bool admits_kind(GateKind kind) const;

  /// Clifford+T gates usable on the target line: {H, X, SX, Z, S, Sdg, T, Tdg, CX}.
  static GateSet ctg0();
  /// ctg0 without CX (target controls nothing).
  static GateSet ctg1();
  /// Z-axis rotations only: {Z, S, Sdg, T, Tdg}.
  static GateSet ctg2();
  /// {I, X, RX, SX, RZ, CZ}.
  static GateSet ibm_native();

 private:
  std::string name_;
  std::vector<GatePattern> patterns_;
};

}  // namespace bsa
