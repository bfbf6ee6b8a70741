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

#include <optional>

#include "bsa/circuit.hpp"
#include "bsa/layout.hpp"
#include "bsa/transpile.hpp"

namespace bsa {

struct CostOptions {
  Weights weights;
  XcMode xc_mode = XcMode::Swaps;
  NativeBasis basis = NativeBasis::ibm_default();
};

struct CostResult {
  /// Lowered and canonicalized, still on logical qubits.
  Circuit native_logical;
  Mapping initial_mapping;
  Mapping final_mapping;
  /// Routed over physical ids with SWAPs lowered, canonicalized.
  Circuit physical;
  int swaps = 0;
  CostReport report;
};

/// rewrite -> canonicalize -> route -> lower SWAPs -> canonicalize ->
/// count. Uses find_placement when no mapping is given. N2 excludes the
/// two-qubit gates that came from inserted SWAPs; XC counts SWAPs (or
/// three CNOTs per SWAP in XcMode::Cnots); D is the depth of the final
/// physical circuit including SWAP gates.
CostResult evaluate_cost(const Circuit& logical, const Layout& layout, const std::optional<Mapping>& mapping,
                         const CostOptions& options = {});

}  // namespace bsa
