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
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsa/circuit.hpp"

namespace bsa {

using PhysicalId = std::uint32_t;

/// Undirected coupling graph over physical qubit ids.
class Layout {
 public:
  Layout() = default;

  void add_qubit(PhysicalId q);
  /// Declares both endpoints. Throws LayoutError on a self-edge.
  void add_edge(PhysicalId a, PhysicalId b);

  /// Lines "qubit <id>" and "edge <a> <b>"; '#' starts a comment.
  static Layout parse(std::string_view text);
  static Layout load(const std::filesystem::path& path);
  std::string emit(const std::vector<std::string>& comments = {}) const;

  /// Heavy-hex lattice with rows + 1 horizontal lines joined by bridge
  /// qubits every fourth column, numbered row-major (a line, then the
  /// bridges below it). heavy_hex(1, 1) is a single 12-qubit cell.
  static Layout heavy_hex(int rows, int cols);
  static Layout path(int n);
  static Layout grid(int rows, int cols);

  std::size_t size() const { return adjacency_.size(); }
  std::vector<PhysicalId> qubits() const;
  /// Each edge once as (low, high), sorted.
  std::vector<std::pair<PhysicalId, PhysicalId>> edges() const;
  bool has_qubit(PhysicalId q) const { return adjacency_.count(q) > 0; }
  bool adjacent(PhysicalId a, PhysicalId b) const;
  /// Ascending.
  std::vector<PhysicalId> neighbors(PhysicalId q) const;
  std::size_t degree(PhysicalId q) const;
  std::size_t max_degree() const;
  PhysicalId max_id() const;
  bool connected() const;

  /// BFS shortest path from a to b inclusive, expanding neighbours in
  /// ascending id order; nullopt when disconnected.
  std::optional<std::vector<PhysicalId>> shortest_path(PhysicalId a, PhysicalId b) const;

 private:
  const std::set<PhysicalId>& adj(PhysicalId q) const;

  std::map<PhysicalId, std::set<PhysicalId>> adjacency_;
};

/// Logical qubit i sits on physical[i].
struct Mapping {
  std::vector<PhysicalId> physical;

  /// "15,19,20".
  static Mapping parse(std::string_view text);
  std::string to_string() const;
  /// Throws LayoutError unless injective, inside the layout and covering
  /// n_logical qubits.
  void validate(const Layout& layout, std::size_t n_logical) const;
  friend bool operator==(const Mapping&, const Mapping&) = default;
};

/// Lexicographically smallest simple path of n qubits; logical wire i is
/// placed on path[i], so the template's middle wire lands mid-path.
/// Throws LayoutError when no such path exists.
Mapping find_chain(const Layout& layout, int n);

/// Embedding of the circuit's interaction graph: every pair of logical
/// qubits sharing a two-qubit gate lands on a coupled pair. Logical qubits
/// are placed in BFS order from the busiest one and physical ids are tried
/// ascending, so the result is deterministic. Falls back to find_chain when
/// no embedding exists.
Mapping find_placement(const Layout& layout, const Circuit& c);

struct RoutingResult {
  /// Gates over physical ids (n_qubits = layout max id + 1), with inserted
  /// SWAP gates kept as SWAP.
  Circuit circuit;
  int swaps = 0;
  Mapping final_mapping;
};

/// Greedy router: for each two-qubit gate on non-adjacent qubits, the
/// first operand walks the shortest path towards the second, one SWAP per
/// hop, until the two are adjacent. Throws LayoutError when they are
/// disconnected.
RoutingResult route(const Circuit& c, const Layout& layout, const Mapping& mapping);

/// Longest chain of gates sharing qubits, each gate counting one step.
int depth(const Circuit& c);

enum class XcMode { Swaps, Cnots };

std::string to_string(XcMode mode);
std::optional<XcMode> parse_xc_mode(std::string_view text);

struct Weights {
  double w1 = 1.0;
  double w2 = 1.0;
  double w3 = 1.0;
  double w4 = 1.0;

  /// "w1,w2,w3,w4". Throws Error on malformed or negative input.
  static Weights parse(std::string_view text);
  friend bool operator==(const Weights&, const Weights&) = default;
};

struct CostCounts {
  int n1 = 0;
  int n2 = 0;
  int xc = 0;
  int d = 0;
  friend bool operator==(const CostCounts&, const CostCounts&) = default;
};

/// w1*n1 + w2*n2 + w3*xc + w4*d. Throws Error on a negative weight.
double wtqc(const CostCounts& counts, const Weights& weights);

struct CostReport {
  CostCounts counts;
  Weights weights;
  double wtqc = 0.0;
};

}  // namespace bsa
