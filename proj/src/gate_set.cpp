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

#include "bsa/gate_set.hpp"

#include <algorithm>

namespace bsa {

bool GatePattern::matches(const Gate& g) const {
  if (!max_abs) return g.kind == kind;
  std::optional<Angle> a;
  if (kind == GateKind::RZ) {
    a = g.z_rotation();
  } else if (g.kind == kind && has_angle(kind)) {
    a = g.angle;
  }
  if (!a) return false;
  const Angle mag = a->abs();
  return mag.numerator() * max_abs->denominator <= max_abs->numerator * mag.denominator();
}

bool GateSet::contains(const Gate& g) const {
  return std::any_of(patterns_.begin(), patterns_.end(), [&](const GatePattern& p) { return p.matches(g); });
}

bool GateSet::admits_kind(GateKind kind) const {
  return std::any_of(patterns_.begin(), patterns_.end(), [&](const GatePattern& p) { return p.kind == kind; });
}

namespace {

std::vector<GatePattern> plain(std::initializer_list<GateKind> kinds) {
  std::vector<GatePattern> out;
  for (GateKind k : kinds) out.push_back(GatePattern{k, std::nullopt});
  return out;
}

}  // namespace

GateSet GateSet::ctg0() {
  using K = GateKind;
  return {"CTG0", plain({K::H, K::X, K::SX, K::Z, K::S, K::Sdg, K::T, K::Tdg, K::CX})};
}

GateSet GateSet::ctg1() {
  using K = GateKind;
  return {"CTG1", plain({K::H, K::X, K::SX, K::Z, K::S, K::Sdg, K::T, K::Tdg})};
}

GateSet GateSet::ctg2() {
  using K = GateKind;
  return {"CTG2", plain({K::Z, K::S, K::Sdg, K::T, K::Tdg})};
}

GateSet GateSet::ibm_native() {
  using K = GateKind;
  return {"ibm-native", plain({K::I, K::X, K::RX, K::SX, K::RZ, K::CZ})};
}

}  // namespace bsa
