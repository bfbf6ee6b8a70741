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

#include "bsa/layout.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include "bsa/error.hpp"

namespace bsa {

namespace {

PhysicalId parse_id(const std::string& word, std::size_t line) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || value > 0xffffffffUL) {
    throw ParseError(line, "bad qubit id '" + word + "'");
  }
  return static_cast<PhysicalId>(value);
}

}  // namespace

void Layout::add_qubit(PhysicalId q) { adjacency_[q]; }

void Layout::add_edge(PhysicalId a, PhysicalId b) {
  if (a == b) throw LayoutError("self-edge on qubit " + std::to_string(a));
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

Layout Layout::parse(std::string_view text) {
  Layout layout;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::vector<std::string> words;
    for (std::string w; line >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "qubit" && words.size() == 2) {
      layout.add_qubit(parse_id(words[1], line_no));
    } else if (words[0] == "edge" && words.size() == 3) {
      const PhysicalId a = parse_id(words[1], line_no);
      const PhysicalId b = parse_id(words[2], line_no);
      if (a == b) throw ParseError(line_no, "self-edge on qubit " + words[1]);
      layout.add_edge(a, b);
    } else {
      throw ParseError(line_no, "expected 'qubit <id>' or 'edge <a> <b>'");
    }
  }
  return layout;
}

Layout Layout::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LayoutError("cannot open layout file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::string Layout::emit(const std::vector<std::string>& comments) const {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& [q, nbrs] : adjacency_) {
    if (nbrs.empty()) out << "qubit " << q << '\n';
  }
  for (const auto& [a, b] : edges()) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

Layout Layout::heavy_hex(int rows, int cols) {
  if (rows < 1 || cols < 1) throw LayoutError("heavy_hex needs rows, cols >= 1");
  const int width = 4 * cols;
  const auto bridge_offset = [](int gap) { return gap % 2 == 0 ? 0 : 2; };
  Layout layout;
  PhysicalId next = 0;
  std::vector<std::map<int, PhysicalId>> line_ids(static_cast<std::size_t>(rows) + 1);
  std::vector<std::map<int, PhysicalId>> bridge_ids(static_cast<std::size_t>(rows));
  for (int r = 0; r <= rows; ++r) {
    int lo = width + 2;
    int hi = 0;
    for (int gap : {r - 1, r}) {
      if (gap < 0 || gap >= rows) continue;
      lo = std::min(lo, bridge_offset(gap));
      hi = std::max(hi, bridge_offset(gap) + width);
    }
    auto& line = line_ids[static_cast<std::size_t>(r)];
    for (int col = lo; col <= hi; ++col) {
      line[col] = next;
      layout.add_qubit(next);
      if (col > lo) layout.add_edge(next - 1, next);
      ++next;
    }
    if (r < rows) {
      for (int col = bridge_offset(r); col <= bridge_offset(r) + width; col += 4) {
        bridge_ids[static_cast<std::size_t>(r)][col] = next++;
      }
    }
  }
  for (int gap = 0; gap < rows; ++gap) {
    for (const auto& [col, id] : bridge_ids[static_cast<std::size_t>(gap)]) {
      layout.add_edge(line_ids[static_cast<std::size_t>(gap)].at(col), id);
      layout.add_edge(id, line_ids[static_cast<std::size_t>(gap) + 1].at(col));
    }
  }
  return layout;
}

Layout Layout::path(int n) {
  if (n < 1) throw LayoutError("path needs at least one qubit");
  Layout layout;
  layout.add_qubit(0);
  for (int i = 1; i < n; ++i) layout.add_edge(static_cast<PhysicalId>(i - 1), static_cast<PhysicalId>(i));
  return layout;
}

Layout Layout::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw LayoutError("grid needs rows, cols >= 1");
  Layout layout;
  const auto id = [&](int r, int c) { return static_cast<PhysicalId>(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      layout.add_qubit(id(r, c));
      if (c > 0) layout.add_edge(id(r, c - 1), id(r, c));
      if (r > 0) layout.add_edge(id(r - 1, c), id(r, c));
    }
  }
  return layout;
}

std::vector<PhysicalId> Layout::qubits() const {
  std::vector<PhysicalId> out;
  out.reserve(adjacency_.size());
  for (const auto& [q, _] : adjacency_) out.push_back(q);
  return out;
}

std::vector<std::pair<PhysicalId, PhysicalId>> Layout::edges() const {
  std::vector<std::pair<PhysicalId, PhysicalId>> out;
  for (const auto& [a, nbrs] : adjacency_) {
    for (PhysicalId b : nbrs) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

const std::set<PhysicalId>& Layout::adj(PhysicalId q) const {
  const auto it = adjacency_.find(q);
  if (it == adjacency_.end()) throw LayoutError("qubit " + std::to_string(q) + " is not in the layout");
  return it->second;
}

bool Layout::adjacent(PhysicalId a, PhysicalId b) const { return adj(a).count(b) > 0; }

std::vector<PhysicalId> Layout::neighbors(PhysicalId q) const {
  const auto& s = adj(q);
  return {s.begin(), s.end()};
}

std::size_t Layout::degree(PhysicalId q) const { return adj(q).size(); }

std::size_t Layout::max_degree() const {
  std::size_t d = 0;
  for (const auto& [_, nbrs] : adjacency_) d = std::max(d, nbrs.size());
  return d;
}

PhysicalId Layout::max_id() const {
  if (adjacency_.empty()) throw LayoutError("empty layout");
  return adjacency_.rbegin()->first;
}

bool Layout::connected() const {
  if (adjacency_.empty()) return true;
  std::set<PhysicalId> seen{adjacency_.begin()->first};
  std::deque<PhysicalId> queue{adjacency_.begin()->first};
  while (!queue.empty()) {
    const PhysicalId q = queue.front();
    queue.pop_front();
    for (PhysicalId n : adj(q)) {
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return seen.size() == adjacency_.size();
}

std::optional<std::vector<PhysicalId>> Layout::shortest_path(PhysicalId a, PhysicalId b) const {
  adj(a);
  adj(b);
  std::map<PhysicalId, PhysicalId> parent{{a, a}};
  std::deque<PhysicalId> queue{a};
  while (!queue.empty()) {
    const PhysicalId q = queue.front();
    queue.pop_front();
    if (q == b) break;
    for (PhysicalId n : adj(q)) {
      if (parent.emplace(n, q).second) queue.push_back(n);
    }
  }
  if (!parent.count(b)) return std::nullopt;
  std::vector<PhysicalId> path{b};
  while (path.back() != a) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------
// Mappings and placement

Mapping Mapping::parse(std::string_view text) {
  Mapping m;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || value > 0xffffffffUL) {
      throw LayoutError("bad mapping entry '" + item + "'");
    }
    m.physical.push_back(static_cast<PhysicalId>(value));
  }
  if (m.physical.empty()) throw LayoutError("empty mapping");
  return m;
}

std::string Mapping::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < physical.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(physical[i]);
  }
  return out;
}

void Mapping::validate(const Layout& layout, std::size_t n_logical) const {
  if (physical.size() < n_logical) {
    throw LayoutError("mapping covers " + std::to_string(physical.size()) + " qubits, circuit needs " +
                      std::to_string(n_logical));
  }
  std::set<PhysicalId> seen;
  for (PhysicalId p : physical) {
    if (!layout.has_qubit(p)) throw LayoutError("mapped qubit " + std::to_string(p) + " is not in the layout");
    if (!seen.insert(p).second) throw LayoutError("qubit " + std::to_string(p) + " is mapped twice");
  }
}

Mapping find_chain(const Layout& layout, int n) {
  if (n < 1) throw LayoutError("chain length must be positive");
  std::vector<PhysicalId> path;
  std::set<PhysicalId> used;
  const std::function<bool()> extend = [&]() {
    if (static_cast<int>(path.size()) == n) return true;
    for (PhysicalId next : layout.neighbors(path.back())) {
      if (used.count(next)) continue;
      path.push_back(next);
      used.insert(next);
      if (extend()) return true;
      used.erase(next);
      path.pop_back();
    }
    return false;
  };
  for (PhysicalId start : layout.qubits()) {
    path = {start};
    used = {start};
    if (extend()) return Mapping{path};
  }
  throw LayoutError("no simple path of " + std::to_string(n) + " qubits in the layout");
}

Mapping find_placement(const Layout& layout, const Circuit& c) {
  const std::size_t n = c.n_qubits();
  std::vector<std::set<std::size_t>> interacts(n);
  for (const Gate& g : c.gates()) {
    if (g.arity() != 2) continue;
    interacts[g.qubits[0]].insert(g.qubits[1]);
    interacts[g.qubits[1]].insert(g.qubits[0]);
  }

  // Placement order: BFS from the busiest unplaced logical qubit.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  while (order.size() < n) {
    std::size_t root = n;
    for (std::size_t q = 0; q < n; ++q) {
      if (!queued[q] && (root == n || interacts[q].size() > interacts[root].size())) root = q;
    }
    std::deque<std::size_t> queue{root};
    queued[root] = true;
    while (!queue.empty()) {
      const std::size_t q = queue.front();
      queue.pop_front();
      order.push_back(q);
      for (std::size_t nb : interacts[q]) {
        if (!queued[nb]) {
          queued[nb] = true;
          queue.push_back(nb);
        }
      }
    }
  }

  const std::vector<PhysicalId> all = layout.qubits();
  std::vector<std::optional<PhysicalId>> placed(n);
  std::set<PhysicalId> used;
  const std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) return true;
    const std::size_t q = order[k];
    std::vector<PhysicalId> candidates = all;
    for (std::size_t nb : interacts[q]) {
      if (placed[nb]) {
        candidates = layout.neighbors(*placed[nb]);
        break;
      }
    }
    for (PhysicalId p : candidates) {
      if (used.count(p) || layout.degree(p) < interacts[q].size()) continue;
      bool fits = true;
      for (std::size_t nb : interacts[q]) {
        if (placed[nb] && !layout.adjacent(*placed[nb], p)) fits = false;
      }
      if (!fits) continue;
      placed[q] = p;
      used.insert(p);
      if (place(k + 1)) return true;
      used.erase(p);
      placed[q].reset();
    }
    return false;
  };
  if (n <= layout.size() && place(0)) {
    Mapping m;
    for (const auto& p : placed) m.physical.push_back(*p);
    return m;
  }
  return find_chain(layout, static_cast<int>(n));
}

// ---------------------------------------------------------------------------
// Routing and depth

RoutingResult route(const Circuit& c, const Layout& layout, const Mapping& mapping) {
  mapping.validate(layout, c.n_qubits());
  std::vector<PhysicalId> pos(mapping.physical.begin(), mapping.physical.begin() + static_cast<std::ptrdiff_t>(c.n_qubits()));
  std::map<PhysicalId, std::size_t> occupant;
  for (std::size_t q = 0; q < pos.size(); ++q) occupant[pos[q]] = q;

  RoutingResult result{Circuit(static_cast<std::size_t>(layout.max_id()) + 1), 0, {}};
  const auto swap_phys = [&](PhysicalId a, PhysicalId b) {
    result.circuit.add(Gate::swap(a, b));
    ++result.swaps;
    const auto ia = occupant.find(a);
    const auto ib = occupant.find(b);
    std::optional<std::size_t> la = ia != occupant.end() ? std::optional(ia->second) : std::nullopt;
    std::optional<std::size_t> lb = ib != occupant.end() ? std::optional(ib->second) : std::nullopt;
    occupant.erase(a);
    occupant.erase(b);
    if (la) {
      pos[*la] = b;
      occupant[b] = *la;
    }
    if (lb) {
      pos[*lb] = a;
      occupant[a] = *lb;
    }
  };

  for (const Gate& g : c.gates()) {
    Gate out = g;
    if (g.arity() == 2) {
      const PhysicalId a = pos[g.qubits[0]];
      const PhysicalId b = pos[g.qubits[1]];
      if (!layout.adjacent(a, b)) {
        const auto path = layout.shortest_path(a, b);
        if (!path) throw LayoutError("qubits " + std::to_string(a) + " and " + std::to_string(b) + " are disconnected");
        for (std::size_t i = 0; i + 2 < path->size(); ++i) swap_phys((*path)[i], (*path)[i + 1]);
      }
      out.qubits = {pos[g.qubits[0]], pos[g.qubits[1]]};
    } else {
      out.qubits[0] = pos[g.qubits[0]];
    }
    result.circuit.add(out);
  }
  result.final_mapping.physical = pos;
  return result;
}

int depth(const Circuit& c) {
  std::vector<int> level(c.n_qubits(), 0);
  int best = 0;
  for (const Gate& g : c.gates()) {
    int d = level[g.qubits[0]];
    if (g.arity() == 2) d = std::max(d, level[g.qubits[1]]);
    ++d;
    level[g.qubits[0]] = d;
    if (g.arity() == 2) level[g.qubits[1]] = d;
    best = std::max(best, d);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cost

std::string to_string(XcMode mode) { return mode == XcMode::Swaps ? "swaps" : "cnots"; }

std::optional<XcMode> parse_xc_mode(std::string_view text) {
  if (text == "swaps") return XcMode::Swaps;
  if (text == "cnots") return XcMode::Cnots;
  return std::nullopt;
}

Weights Weights::parse(std::string_view text) {
  std::vector<double> values;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::istringstream field(item);
    double v = 0;
    std::string rest;
    if (!(field >> v) || (field >> rest)) throw Error("bad weight '" + item + "'");
    if (v < 0) throw Error("negative weight '" + item + "'");
    values.push_back(v);
  }
  if (values.size() != 4) throw Error("expected four comma-separated weights");
  return {values[0], values[1], values[2], values[3]};
}

double wtqc(const CostCounts& counts, const Weights& w) {
  if (w.w1 < 0 || w.w2 < 0 || w.w3 < 0 || w.w4 < 0) throw Error("weights must be non-negative");
  return w.w1 * counts.n1 + w.w2 * counts.n2 + w.w3 * counts.xc + w.w4 * counts.d;
}

}  // namespace bsa
