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

#include "bsa/wires.hpp"

#include <string>

#include "bsa/error.hpp"

namespace bsa {

WireAssignment standard_wires(int n_qubits) {
  switch (n_qubits) {
    case 2: return {1, {0}};
    case 3: return {1, {0, 2}};
    case 4: return {2, {0, 1, 3}};
    case 5: return {2, {0, 4, 1, 3}};
    default:
      throw CircuitError("symmetric gates cover 2..5 qubits, got " + std::to_string(n_qubits));
  }
}

}  // namespace bsa
