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

#include "bsa/circuit_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "bsa/error.hpp"

namespace bsa {
namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

Qubit parse_index(const std::string& word, std::size_t line) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || value > 0xffffffffUL) {
    throw ParseError(line, "bad qubit index '" + word + "'");
  }
  return static_cast<Qubit>(value);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!circuit) {
      if (words[0] != "qubits" || words.size() != 2) {
        throw ParseError(line_no, "expected 'qubits N' before any gate");
      }
      const Qubit n = parse_index(words[1], line_no);
      if (n == 0) throw ParseError(line_no, "qubit count must be positive");
      circuit.emplace(n);
      continue;
    }

    const auto kind = kind_from_mnemonic(words[0]);
    if (!kind) throw ParseError(line_no, "unknown mnemonic '" + words[0] + "'");
    const std::size_t expected = 1 + (has_angle(*kind) ? 1 : 0) + static_cast<std::size_t>(arity(*kind));
    if (words.size() != expected) {
      throw ParseError(line_no, "'" + words[0] + "' expects " + std::to_string(expected - 1) + " operands");
    }

    Gate g;
    g.kind = *kind;
    std::size_t next = 1;
    if (has_angle(*kind)) {
      try {
        g.angle = Angle::parse(words[next++]);
      } catch (const AngleError& e) {
        throw ParseError(line_no, e.what());
      }
    }
    for (int i = 0; i < arity(*kind); ++i) g.qubits[i] = parse_index(words[next++], line_no);
    try {
      circuit->add(g);
    } catch (const CircuitError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits N' header");
  return *circuit;
}

std::string emit_circuit(const Circuit& c, std::span<const std::string> comments) {
  std::string out;
  for (const auto& comment : comments) out += "# " + comment + "\n";
  out += "qubits " + std::to_string(c.n_qubits()) + "\n";
  for (const Gate& g : c.gates()) out += to_string(g) + "\n";
  return out;
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open circuit file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

}  // namespace bsa
