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

#include <span>
#include <string>
#include <string_view>

#include "bsa/circuit.hpp"

namespace bsa {

/// Parses the line-based circuit format:
///
///   # comment
///   qubits 3
///   h 1
///   rz -1/4 1
///   cx 2 1
///
/// Throws ParseError carrying the 1-based line number.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit. Each entry of `comments` becomes a leading
/// "# ..." line.
std::string emit_circuit(const Circuit& c, std::span<const std::string> comments = {});

Circuit load_circuit(const std::string& path);

}  // namespace bsa
