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

#include "bsa/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bsa/error.hpp"
#include "bsa/simulator.hpp"

namespace bsa {

std::optional<TraceStyle> parse_trace_style(std::string_view text) {
  if (text == "phases") return TraceStyle::Phases;
  if (text == "states") return TraceStyle::States;
  return std::nullopt;
}

namespace {

std::string rotation_name(const Gate& g) {
  switch (g.kind) {
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "S†";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "T†";
    default: return "RZ(" + g.angle.to_pretty() + ")";
  }
}

std::string format_phase(const Angle& phase, TraceStyle style) {
  if (style == TraceStyle::States) {
    switch (phase.units()) {
      case 0: return "|+>";
      case Angle::kMaxDenominator / 2: return "|+i>";
      case Angle::kMaxDenominator: return "|->";
      case 3 * Angle::kMaxDenominator / 2: return "|-i>";
      default: break;
    }
  }
  return phase.to_pretty_positive();
}

}  // namespace

TraceTable trace_table(const Circuit& c, const WireAssignment& wires, TraceStyle style) {
  const std::size_t k = wires.controls.size();
  const std::uint64_t rows = std::uint64_t{1} << k;
  const auto input_of = [&](std::uint64_t x) {
    std::uint64_t idx = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if ((x >> b) & 1U) idx |= std::uint64_t{1} << wires.controls[b];
    }
    return idx;
  };

  TraceTable table;
  std::string label = "|";
  for (std::size_t b = k; b >= 1; --b) label += "c" + std::to_string(b) + (b > 1 ? " " : "");
  table.header.push_back(label + ">");
  table.header.push_back("SP1(H)");

  const auto layout_events = phase_track(c, wires.target, input_of(0));
  int theta = 0;
  for (std::size_t e = 0; e < layout_events.size(); ++e) {
    const TraceEvent& ev = layout_events[e];
    const Gate& g = c.gates()[ev.gate_index];
    if (ev.kind == TraceEvent::Kind::Rotation) {
      const bool aux = e + 1 == layout_events.size() && e > 0 && layout_events[e - 1].kind == TraceEvent::Kind::Rotation;
      table.header.push_back(aux ? "AX2(" + rotation_name(g) + ")" : "θ" + std::to_string(++theta) + "(" + rotation_name(g) + ")");
      continue;
    }
    const auto it = std::find(wires.controls.begin(), wires.controls.end(), ev.control);
    const std::string base = ev.kind == TraceEvent::Kind::Cnot ? "CNOT" : "CZ";
    table.header.push_back(it != wires.controls.end() ? base + std::to_string(it - wires.controls.begin() + 1)
                                                      : base + "(q" + std::to_string(ev.control) + ")");
  }
  table.header.push_back("SP2(H)");
  table.header.push_back("Output");

  for (std::uint64_t x = 0; x < rows; ++x) {
    std::vector<std::string> row;
    std::string bits = "|";
    for (std::size_t b = k; b >= 1; --b) bits += std::string((x >> (b - 1)) & 1U ? "1" : "0") + (b > 1 ? " " : "");
    row.push_back(bits + ">");
    row.push_back(format_phase(Angle::zero(), style));
    Angle last = Angle::zero();
    for (const TraceEvent& ev : phase_track(c, wires.target, input_of(x))) {
      last = ev.phase;
      row.push_back(ev.kind != TraceEvent::Kind::Rotation && !ev.active ? "–" : format_phase(ev.phase, style));
    }
    const auto out = equator_output(last);
    row.push_back(out ? (*out ? "|1>" : "|0>") : "?");
    row.push_back(out ? (*out ? "True" : "False") : "?");
    table.rows.push_back(std::move(row));
    table.outputs.push_back(out);
  }
  return table;
}

std::size_t display_width(std::string_view utf8) {
  return static_cast<std::size_t>(
      std::count_if(utf8.begin(), utf8.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

std::string render_columns(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  const auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], display_width(cells[i]));
  };
  measure(header);
  for (const auto& r : rows) measure(r);

  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - display_width(cells[i]) + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w + 2;
  out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string render_trace(const TraceTable& table) { return render_columns(table.header, table.rows); }

std::string format_number(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

std::optional<ReferenceCost> reference_cost(OperatorKind kind, int n_qubits) {
  struct Row {
    OperatorKind kind;
    int n;
    ReferenceCost cost;
  };
  using K = OperatorKind;
  static const Row table[] = {
      {K::CV, 2, {{7, 2, 0, 9}, 18, {6, 1, 0, 7}, 14}},
      {K::CV, 4, {{147, 29, 5, 110}, 291, {53, 7, 0, 42}, 102}},
      {K::And, 3, {{48, 5, 2, 42}, 97, {34, 3, 0, 29}, 66}},
      {K::And, 4, {{146, 29, 5, 108}, 288, {52, 7, 0, 41}, 100}},
      {K::And, 5, {{387, 41, 24, 299}, 751, {81, 9, 0, 74}, 164}},
      {K::Nand, 4, {{105, 20, 2, 83}, 210, {52, 7, 0, 41}, 100}},
      {K::Or, 4, {{102, 20, 2, 80}, 204, {52, 7, 0, 41}, 100}},
      {K::Or, 5, {{398, 41, 27, 304}, 770, {92, 9, 0, 76}, 177}},
      {K::Nor, 4, {{103, 20, 2, 83}, 208, {52, 7, 0, 41}, 100}},
      {K::Implication, 3, {{49, 9, 1, 39}, 98, {28, 3, 0, 21}, 52}},
      {K::Inhibition, 3, {{50, 9, 1, 39}, 99, {28, 3, 0, 21}, 52}},
      {K::Fredkin, 3, {{67, 7, 4, 59}, 137, {35, 5, 0, 22}, 62}},
      {K::Fredkin, 4, {{189, 40, 8, 115}, 352, {56, 9, 0, 46}, 111}},
      {K::Miller, 4, {{151, 29, 3, 113}, 296, {70, 13, 0, 58}, 141}},
  };
  for (const Row& r : table) {
    if (r.kind == kind && r.n == n_qubits) return r.cost;
  }
  return std::nullopt;
}

KeyValueBlock& KeyValueBlock::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string KeyValueBlock::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

}  // namespace bsa
