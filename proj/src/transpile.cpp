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

#include "bsa/transpile.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "bsa/error.hpp"

namespace bsa {

NativeBasis::NativeBasis(std::string name, std::set<GateKind> single_qubit, std::set<GateKind> two_qubit)
    : name_(std::move(name)), single_(std::move(single_qubit)), two_(std::move(two_qubit)) {
  for (GateKind k : single_) {
    if (arity(k) != 1) throw TranspileError("'" + std::string(mnemonic(k)) + "' is not a single-qubit gate");
  }
  for (GateKind k : two_) {
    if (arity(k) != 2) throw TranspileError("'" + std::string(mnemonic(k)) + "' is not a two-qubit gate");
  }
}

NativeBasis NativeBasis::ibm_default() {
  using K = GateKind;
  return {"ibm-native", {K::I, K::X, K::RX, K::SX, K::RZ}, {K::CZ}};
}

NativeBasis NativeBasis::parse(std::string_view text, std::string name) {
  std::set<GateKind> single;
  std::set<GateKind> two;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string section;
    std::string gate;
    std::string extra;
    if (!(words >> section)) continue;
    if (!(words >> gate) || (words >> extra)) throw ParseError(line_no, "expected 'single <gate>' or 'two <gate>'");
    const auto kind = kind_from_mnemonic(gate);
    if (!kind) throw ParseError(line_no, "unknown mnemonic '" + gate + "'");
    if (section == "single") {
      if (arity(*kind) != 1) throw ParseError(line_no, "'" + gate + "' is not a single-qubit gate");
      single.insert(*kind);
    } else if (section == "two") {
      if (arity(*kind) != 2) throw ParseError(line_no, "'" + gate + "' is not a two-qubit gate");
      two.insert(*kind);
    } else {
      throw ParseError(line_no, "unknown section '" + section + "'");
    }
  }
  return {std::move(name), std::move(single), std::move(two)};
}

NativeBasis NativeBasis::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open basis file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.stem().string());
}

bool NativeBasis::contains(GateKind kind) const { return single_.count(kind) > 0 || two_.count(kind) > 0; }

namespace {

std::optional<std::vector<Gate>> rule_for(const Gate& g) {
  using K = GateKind;
  const Qubit a = g.qubits[0];
  const Qubit b = g.qubits[1];
  const auto rz = [](std::int64_t num, std::int64_t den, Qubit q) { return Gate::rz(Angle::fraction(num, den), q); };
  const auto one = [](K k, Qubit q) { return Gate::single(k, q); };
  switch (g.kind) {
    case K::I: return std::vector<Gate>{};
    case K::H: return std::vector<Gate>{rz(1, 2, a), one(K::SX, a), rz(1, 2, a)};
    case K::S:
    case K::Sdg:
    case K::T:
    case K::Tdg:
    case K::Z: return std::vector<Gate>{Gate::rz(*g.z_rotation(), a)};
    case K::Y: return std::vector<Gate>{rz(1, 1, a), one(K::X, a)};
    case K::SXdg: return std::vector<Gate>{rz(1, 1, a), one(K::SX, a), rz(1, 1, a)};
    case K::X: return std::vector<Gate>{one(K::SX, a), one(K::SX, a)};
    case K::RX: return std::vector<Gate>{one(K::H, a), Gate::rz(g.angle, a), one(K::H, a)};
    case K::CX: return std::vector<Gate>{one(K::H, b), Gate::cz(a, b), one(K::H, b)};
    case K::CZ: return std::vector<Gate>{one(K::H, b), Gate::cx(a, b), one(K::H, b)};
    case K::SWAP: return std::vector<Gate>{Gate::cx(a, b), Gate::cx(b, a), Gate::cx(a, b)};
    case K::SX:
    case K::RZ: return std::nullopt;
  }
  return std::nullopt;
}

void expand(const Gate& g, const NativeBasis& basis, std::vector<GateKind>& stack, Circuit& out) {
  if (basis.contains(g)) {
    out.add(g);
    return;
  }
  const auto no_rule = [&](const std::string& why) {
    return TranspileError("cannot lower '" + to_string(g) + "' into basis '" + basis.name() + "': " + why);
  };
  for (GateKind k : stack) {
    if (k == g.kind) throw no_rule("rewrite rules cycle");
  }
  const auto rule = rule_for(g);
  if (!rule) throw no_rule("no rewrite rule");
  stack.push_back(g.kind);
  for (const Gate& sub : *rule) expand(sub, basis, stack, out);
  stack.pop_back();
}

}  // namespace

Circuit rewrite_to_basis(const Circuit& c, const NativeBasis& basis) {
  Circuit out(c.n_qubits());
  std::vector<GateKind> stack;
  for (const Gate& g : c.gates()) expand(g, basis, stack, out);
  return out;
}

Circuit canonicalize(const Circuit& c) {
  std::vector<std::optional<Gate>> kept;
  kept.reserve(c.size());
  // Position in `kept` of a trailing RZ on each wire, if the wire's last
  // surviving gate is one.
  std::vector<std::optional<std::size_t>> open_rz(c.n_qubits());
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::I) continue;
    if (g.kind == GateKind::RZ) {
      const Qubit q = g.qubits[0];
      if (open_rz[q]) {
        Gate& prev = *kept[*open_rz[q]];
        prev.angle += g.angle;
        if (prev.angle.is_zero()) {
          kept[*open_rz[q]].reset();
          open_rz[q].reset();
        }
        continue;
      }
      if (g.angle.is_zero()) continue;
      open_rz[q] = kept.size();
      kept.push_back(g);
      continue;
    }
    for (int i = 0; i < g.arity(); ++i) open_rz[g.qubits[static_cast<std::size_t>(i)]].reset();
    kept.push_back(g);
  }
  Circuit out(c.n_qubits());
  for (const auto& g : kept) {
    if (g) out.add(*g);
  }
  return out;
}

GateCounts count_gates(const Circuit& c, const NativeBasis& basis) {
  GateCounts counts;
  for (const Gate& g : c.gates()) {
    if (!basis.contains(g)) {
      throw TranspileError("gate '" + to_string(g) + "' is not in basis '" + basis.name() + "'");
    }
    (g.arity() == 1 ? counts.n1 : counts.n2) += 1;
  }
  return counts;
}

}  // namespace bsa
