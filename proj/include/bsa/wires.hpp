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

#include <vector>

#include "bsa/gate.hpp"

namespace bsa {

/// Logical wire roles of an n-qubit symmetric gate. The target sits on the
/// middle wire (index n/2); controls[k] is the wire of control_{k+1}.
///
/// Controls that toggle the target most often are placed next to it:
///   n = 2: c1 t
///   n = 3: c1 t c2
///   n = 4: c1 c2 t c3
///   n = 5: c1 c3 t c4 c2
struct WireAssignment {
  Qubit target;
  std::vector<Qubit> controls;
};

WireAssignment standard_wires(int n_qubits);

}  // namespace bsa
