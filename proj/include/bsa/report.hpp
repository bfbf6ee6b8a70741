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
#include <string>
#include <utility>
#include <vector>

#include "bsa/layout.hpp"
#include "bsa/synth.hpp"

namespace bsa {

// ---------------------------------------------------------------------------
// Phase trace tables

enum class TraceStyle {
  /// Every phase as a fraction of pi in [0, 2pi): "0", "π/2", "7π/4".
  Phases,
  /// Multiples of pi/2 as named equator states (|+>, |+i>, |->, |-i>),
  /// everything else as a fraction.
  States,
};

std::optional<TraceStyle> parse_trace_style(std::string_view text);

struct TraceTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// Boolean output per row; nullopt when the final phase is off the axis.
  std::vector<std::optional<bool>> outputs;
};

/// One row per control assignment (bit k = control_{k+1}), labelled
/// |c_k ... c_1>. Columns: SP1, then one per target event (theta slots,
/// CNOTs with "–" when the control is 0, a trailing auxiliary rotation as
/// AX2), SP2 as |0>/|1>, and the Boolean output. Throws SimulationError
/// for circuits the phase tracker rejects.
TraceTable trace_table(const Circuit& c, const WireAssignment& wires, TraceStyle style = TraceStyle::Phases);

/// Left-aligned columns separated by two spaces, one line per row, with a
/// rule under the header.
std::string render_columns(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::string render_trace(const TraceTable& table);

/// Display width in code points.
std::size_t display_width(std::string_view utf8);

// ---------------------------------------------------------------------------
// Cost reporting

/// Integers print without a decimal point; other values with up to ten
/// significant digits.
std::string format_number(double v);

/// Published cost rows for comparison: first the conventional
/// decomposition, second the BSA design.
struct ReferenceCost {
  CostCounts conventional;
  double conventional_wtqc;
  CostCounts bsa;
  double bsa_wtqc;
};

std::optional<ReferenceCost> reference_cost(OperatorKind kind, int n_qubits);

/// Ordered key=value lines.
class KeyValueBlock {
 public:
  KeyValueBlock& add(std::string key, std::string value);
  KeyValueBlock& add(std::string key, double value) { return add(std::move(key), format_number(value)); }
  KeyValueBlock& add(std::string key, int value) { return add(std::move(key), std::to_string(value)); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace bsa
