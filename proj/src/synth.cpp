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

#include "bsa/synth.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "bsa/error.hpp"

namespace bsa {

// ---------------------------------------------------------------------------
// Templates

int Template::n_cnot() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.kind == SlotKind::Cnot; }));
}

int Template::n_theta() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.kind == SlotKind::Theta; }));
}

std::vector<int> Template::cnot_schedule() const {
  std::vector<int> out;
  for (const Slot& s : slots) {
    if (s.kind == SlotKind::Cnot) out.push_back(s.index);
  }
  return out;
}

std::vector<int> cnot_schedule(int n_controls) {
  if (n_controls < 1) throw SynthesisError("cnot schedule needs at least one control");
  if (n_controls == 1) return {1};
  std::vector<int> inner = cnot_schedule(n_controls - 1);
  for (int& c : inner) ++c;
  std::vector<int> out = inner;
  out.push_back(1);
  out.insert(out.end(), inner.begin(), inner.end());
  return out;
}

Template make_template(int n_qubits) {
  Template t;
  t.n_qubits = n_qubits;
  t.wires = standard_wires(n_qubits);
  t.slots.push_back({SlotKind::SP1, 0});
  t.slots.push_back({SlotKind::AX1, 0});
  int theta = 0;
  t.slots.push_back({SlotKind::Theta, theta++});
  for (int c : cnot_schedule(n_qubits - 1)) {
    t.slots.push_back({SlotKind::Cnot, c});
    t.slots.push_back({SlotKind::Theta, theta++});
  }
  t.slots.push_back({SlotKind::AX2, 0});
  t.slots.push_back({SlotKind::SP2, 0});
  return t;
}

std::vector<std::vector<int>> sign_matrix(const Template& t) {
  const int n_controls = static_cast<int>(t.wires.controls.size());
  const std::size_t rows = std::size_t{1} << n_controls;
  std::vector<std::vector<int>> out(rows, std::vector<int>(static_cast<std::size_t>(t.n_theta()), 1));
  for (std::size_t x = 0; x < rows; ++x) {
    int sign = 1;
    for (auto it = t.slots.rbegin(); it != t.slots.rend(); ++it) {
      if (it->kind == SlotKind::Cnot && ((x >> (it->index - 1)) & 1U)) sign = -sign;
      if (it->kind == SlotKind::Theta) out[x][static_cast<std::size_t>(it->index)] = sign;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Narrowing

NarrowingResult narrow_gate_set(int n_cnot) {
  using K = GateKind;
  if (n_cnot < 1) throw SynthesisError("template needs at least one CNOT");
  NarrowingResult r;
  const auto pm = [](std::int64_t den) { return std::vector<Angle>{Angle::fraction(-1, den), Angle::fraction(1, den)}; };
  if (n_cnot == 1) {
    r.ctg3 = GateSet("CTG3", {{K::S, {}}, {K::Sdg, {}}, {K::T, {}}, {K::Tdg, {}}});
    r.seg1 = {Segment::Quadrants, Segment::Octants};
    r.candidates = {Angle::fraction(-1, 2), Angle::fraction(-1, 4), Angle::fraction(1, 4), Angle::fraction(1, 2)};
    return r;
  }
  if (n_cnot == 3) {
    r.ctg3 = GateSet("CTG3", {{K::T, {}}, {K::Tdg, {}}});
    r.seg1 = {Segment::Octants};
    r.candidates = pm(4);
    return r;
  }
  const PiFraction bound = n_cnot == 2 ? PiFraction{1, 3} : PiFraction{1, n_cnot + 1};
  r.ctg3 = GateSet("CTG3", {{K::RZ, bound}});
  r.seg1_arbitrary = true;
  std::int64_t den = 1;
  while (den < n_cnot + 1) den *= 2;
  if (den > Angle::kMaxDenominator) throw SynthesisError("template too large for the angle resolution");
  r.candidates = pm(den);
  return r;
}

// ---------------------------------------------------------------------------
// Theta solving

std::string to_string(Superposition s) {
  switch (s) {
    case Superposition::H: return "H";
    case Superposition::SX: return "SX";
    case Superposition::SXdg: return "SX†";
  }
  return "?";
}

std::string to_string(Auxiliary a) {
  switch (a) {
    case Auxiliary::I: return "I";
    case Auxiliary::Z: return "Z";
    case Auxiliary::MinusZ: return "-Z";
  }
  return "?";
}

namespace {

std::string angle_name(const Angle& a) {
  const Gate g = z_rotation_gate(a, 0);
  switch (g.kind) {
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "S†";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "T†";
    default: return "RZ(" + a.to_pretty() + ")";
  }
}

constexpr std::int64_t kUnitsPerTurn = 2 * Angle::kMaxDenominator;
constexpr std::int64_t kHalfTurn = Angle::kMaxDenominator;

std::int64_t wrap_units(std::int64_t u) { return ((u % kUnitsPerTurn) + kUnitsPerTurn) % kUnitsPerTurn; }

}  // namespace

std::string ThetaAssignment::thetas_to_string() const {
  std::string out;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (i) out += ' ';
    out += angle_name(thetas[i]);
  }
  return out;
}

std::optional<ThetaAssignment> solve_phases(const Template& t, std::span<const Angle> row_phases,
                                            std::span<const Angle> candidates, bool allow_ax2) {
  const auto signs = sign_matrix(t);
  const std::size_t rows = signs.size();
  if (row_phases.size() != rows) throw SynthesisError("row phase count does not match the template");
  const std::size_t m = static_cast<std::size_t>(t.n_theta());

  std::vector<Angle> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end(), std::greater<>());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (order.empty()) return std::nullopt;

  std::vector<std::int64_t> target(rows);
  for (std::size_t x = 0; x < rows; ++x) target[x] = row_phases[x].units();

  // partial[d] holds the row sums after fixing slots m-1 .. m-d.
  std::vector<std::vector<std::int64_t>> partial(m + 1, std::vector<std::int64_t>(rows, 0));
  std::vector<std::size_t> choice(m, 0);
  std::optional<ThetaAssignment> found;

  const auto leaf = [&]() -> bool {
    const auto& sums = partial[m];
    for (std::int64_t ax2 : {std::int64_t{0}, kHalfTurn}) {
      if (ax2 && !allow_ax2) break;
      bool ok = true;
      for (std::size_t x = 0; x < rows && ok; ++x) ok = wrap_units(sums[x] + ax2 - target[x]) == 0;
      if (ok) {
        ThetaAssignment a;
        a.thetas.resize(m);
        for (std::size_t j = 0; j < m; ++j) a.thetas[j] = order[choice[j]];
        a.ax2 = ax2 ? Auxiliary::Z : Auxiliary::I;
        found = std::move(a);
        return true;
      }
    }
    return false;
  };

  const auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == m) return leaf();
    const std::size_t slot = m - 1 - depth;
    for (std::size_t k = 0; k < order.size(); ++k) {
      choice[slot] = k;
      const std::int64_t u = order[k].units();
      for (std::size_t x = 0; x < rows; ++x) partial[depth + 1][x] = partial[depth][x] + signs[x][slot] * u;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

bool satisfies(const Template& t, const ThetaAssignment& a, std::span<const Angle> row_phases) {
  const auto signs = sign_matrix(t);
  if (row_phases.size() != signs.size() || a.thetas.size() != static_cast<std::size_t>(t.n_theta())) return false;
  const Angle aux = a.ax2 == Auxiliary::I ? Angle::zero() : Angle::pi();
  for (std::size_t x = 0; x < signs.size(); ++x) {
    Angle sum = aux;
    for (std::size_t j = 0; j < a.thetas.size(); ++j) sum += signs[x][j] > 0 ? a.thetas[j] : -a.thetas[j];
    if (sum != row_phases[x]) return false;
  }
  return true;
}

Circuit instantiate(const Template& t, const ThetaAssignment& a) {
  if (a.thetas.size() != static_cast<std::size_t>(t.n_theta())) throw SynthesisError("theta count does not match the template");
  const Qubit target = t.wires.target;
  Circuit c(static_cast<std::size_t>(t.n_qubits));
  const auto superposition = [&](Superposition s) {
    switch (s) {
      case Superposition::H: return Gate::single(GateKind::H, target);
      case Superposition::SX: return Gate::single(GateKind::SX, target);
      case Superposition::SXdg: return Gate::single(GateKind::SXdg, target);
    }
    return Gate::single(GateKind::H, target);
  };
  for (const Slot& s : t.slots) {
    switch (s.kind) {
      case SlotKind::SP1: c.add(superposition(a.sp1)); break;
      case SlotKind::AX1: break;
      case SlotKind::Theta: c.add(z_rotation_gate(a.thetas[static_cast<std::size_t>(s.index)], target)); break;
      case SlotKind::Cnot: c.add(Gate::cx(t.wires.controls[static_cast<std::size_t>(s.index - 1)], target)); break;
      case SlotKind::AX2:
        if (a.ax2 != Auxiliary::I) c.add(Gate::single(GateKind::Z, target));
        break;
      case SlotKind::SP2: c.add(superposition(a.sp2)); break;
    }
  }
  return c;
}

TruthTable truth_table(BooleanOp op, int n_controls) {
  if (n_controls < 1) throw SynthesisError("truth table needs at least one control");
  const std::size_t rows = std::size_t{1} << n_controls;
  const std::size_t all = rows - 1;
  TruthTable tt{n_controls, std::vector<bool>(rows, false)};
  const auto fill = [&](auto f) {
    for (std::size_t x = 0; x < rows; ++x) tt.outputs[x] = f(x);
  };
  switch (op) {
    case BooleanOp::Toffoli:
    case BooleanOp::And: fill([&](std::size_t x) { return x == all; }); break;
    case BooleanOp::Nand: fill([&](std::size_t x) { return x != all; }); break;
    case BooleanOp::Or: fill([&](std::size_t x) { return x != 0; }); break;
    case BooleanOp::Nor: fill([&](std::size_t x) { return x == 0; }); break;
    case BooleanOp::Implication:
    case BooleanOp::Inhibition: {
      if (n_controls != 2) throw SynthesisError("implication and inhibition take exactly two controls");
      const bool negate = op == BooleanOp::Inhibition;
      fill([&](std::size_t x) {
        const bool a = x & 1U;
        const bool b = (x >> 1) & 1U;
        return (!a || b) != negate;
      });
      break;
    }
  }
  return tt;
}

TruthTable parse_truth_table(std::string_view text) {
  TruthTable tt;
  for (char ch : text) {
    if (ch == 'T' || ch == 't' || ch == '1') {
      tt.outputs.push_back(true);
    } else if (ch == 'F' || ch == 'f' || ch == '0') {
      tt.outputs.push_back(false);
    } else {
      throw SynthesisError("bad truth table character '" + std::string(1, ch) + "'");
    }
  }
  const std::size_t rows = tt.outputs.size();
  if (rows < 2 || (rows & (rows - 1)) != 0) throw SynthesisError("truth table length must be a power of two >= 2");
  tt.n_controls = std::countr_zero(rows);
  return tt;
}

namespace {

// Row whose output amplitude fixes the sign of a pi auxiliary: first row of
// the least frequent output value, first True row on a tie.
std::size_t reference_row(const TruthTable& tt) {
  const auto n_true = static_cast<std::size_t>(std::count(tt.outputs.begin(), tt.outputs.end(), true));
  const std::size_t n_false = tt.outputs.size() - n_true;
  const bool wanted = n_true <= n_false;
  return static_cast<std::size_t>(std::find(tt.outputs.begin(), tt.outputs.end(), wanted) - tt.outputs.begin());
}

std::uint64_t basis_index(const WireAssignment& w, std::uint64_t x, bool target_bit) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < w.controls.size(); ++k) {
    if ((x >> k) & 1U) idx |= std::uint64_t{1} << w.controls[k];
  }
  if (target_bit) idx |= std::uint64_t{1} << w.target;
  return idx;
}

}  // namespace

ThetaAssignment solve_thetas(const Template& t, const BooleanSpec& spec) {
  const auto& tt = spec.table;
  if (static_cast<std::size_t>(tt.n_controls) != t.wires.controls.size()) {
    throw SynthesisError("truth table width does not match the template");
  }
  std::vector<Angle> rows;
  for (bool f : tt.outputs) rows.push_back(f ? Angle::pi() : Angle::zero());
  const NarrowingResult narrowed = narrow_gate_set(t.n_cnot());
  auto a = solve_phases(t, rows, narrowed.candidates, true);
  if (!a) throw SynthesisError("unsatisfiable in CTG3: " + tt.to_string());
  if (a->ax2 != Auxiliary::I) {
    const std::size_t x = reference_row(tt);
    const Circuit c = instantiate(t, *a);
    const StateVector out = apply(c, StateVector::basis(static_cast<std::size_t>(t.n_qubits), basis_index(t.wires, x, false)));
    const Complex amp = out[basis_index(t.wires, x, tt.outputs[x])];
    constexpr double kEps = 1e-9;
    const bool upper = amp.imag() > kEps || (std::abs(amp.imag()) <= kEps && amp.real() > 0);
    a->ax2 = upper ? Auxiliary::Z : Auxiliary::MinusZ;
  }
  return *a;
}

// ---------------------------------------------------------------------------
// Operator library

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Toffoli: return "toffoli";
    case OperatorKind::And: return "and";
    case OperatorKind::Nand: return "nand";
    case OperatorKind::Or: return "or";
    case OperatorKind::Nor: return "nor";
    case OperatorKind::Implication: return "implication";
    case OperatorKind::Inhibition: return "inhibition";
    case OperatorKind::CV: return "cv";
    case OperatorKind::CVdg: return "cvdg";
    case OperatorKind::Fredkin: return "fredkin";
    case OperatorKind::Miller: return "miller";
  }
  return "?";
}

std::optional<OperatorKind> parse_operator(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (OperatorKind k : {OperatorKind::Toffoli, OperatorKind::And, OperatorKind::Nand, OperatorKind::Or, OperatorKind::Nor,
                         OperatorKind::Implication, OperatorKind::Inhibition, OperatorKind::CV, OperatorKind::CVdg,
                         OperatorKind::Fredkin, OperatorKind::Miller}) {
    if (to_string(k) == lower) return k;
  }
  if (lower == "cv†" || lower == "cvdag") return OperatorKind::CVdg;
  if (lower == "imp") return OperatorKind::Implication;
  if (lower == "inh") return OperatorKind::Inhibition;
  if (lower == "cswap") return OperatorKind::Fredkin;
  return std::nullopt;
}

std::optional<BooleanOp> boolean_op(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Toffoli: return BooleanOp::Toffoli;
    case OperatorKind::And: return BooleanOp::And;
    case OperatorKind::Nand: return BooleanOp::Nand;
    case OperatorKind::Or: return BooleanOp::Or;
    case OperatorKind::Nor: return BooleanOp::Nor;
    case OperatorKind::Implication: return BooleanOp::Implication;
    case OperatorKind::Inhibition: return BooleanOp::Inhibition;
    default: return std::nullopt;
  }
}

std::pair<int, int> supported_range(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Implication:
    case OperatorKind::Inhibition: return {3, 3};
    case OperatorKind::Fredkin: return {3, 4};
    case OperatorKind::Miller: return {4, 4};
    default: return {2, 5};
  }
}

namespace {

std::string join_wires(std::span<const Qubit> qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ',';
    out += 'q' + std::to_string(qs[i]);
  }
  return out;
}

std::vector<std::string> template_provenance(const Template& t, const ThetaAssignment& a) {
  std::vector<std::string> out;
  std::string sched;
  for (int c : t.cnot_schedule()) {
    if (!sched.empty()) sched += ' ';
    sched += 'c' + std::to_string(c);
  }
  out.push_back("template: symmetric, " + std::to_string(t.n_cnot()) + " cnots, schedule " + sched);
  out.push_back("wires: target q" + std::to_string(t.wires.target) + ", controls " + join_wires(t.wires.controls));
  out.push_back("thetas: " + a.thetas_to_string());
  std::string fr;
  for (const Angle& th : a.thetas) {
    if (!fr.empty()) fr += ' ';
    fr += th.to_fraction();
  }
  out.push_back("theta fractions: " + fr);
  out.push_back("ax2: " + to_string(a.ax2) + ", sp1: " + to_string(a.sp1) + ", sp2: " + to_string(a.sp2));
  return out;
}

const ThetaAssignment& toffoli_assignment_cached(int n) {
  static std::vector<std::optional<ThetaAssignment>> cache(6);
  auto& slot = cache.at(static_cast<std::size_t>(n));
  if (!slot) slot = solve_thetas(make_template(n), BooleanSpec::named(BooleanOp::Toffoli, n - 1));
  return *slot;
}

void require_ok(const Circuit& c, OperatorKind kind, int n) {
  const Verification v = verify_operator(c, kind, n);
  if (!v.ok) throw SynthesisError("self-check failed for " + to_string(kind) + "(" + std::to_string(n) + "): " + v.detail);
}

}  // namespace

SynthesisResult synth(OperatorKind kind, int n_qubits) {
  const auto [lo, hi] = supported_range(kind);
  if (n_qubits < lo || n_qubits > hi) {
    throw SynthesisError("unsupported operator size: " + to_string(kind) + " with " + std::to_string(n_qubits) +
                         " qubits (supported " + std::to_string(lo) + ".." + std::to_string(hi) + ")");
  }
  const std::string head = "operator: " + to_string(kind) + ", " + std::to_string(n_qubits) + " qubits";

  if (const auto op = boolean_op(kind)) {
    Template t = make_template(n_qubits);
    ThetaAssignment a = solve_thetas(t, BooleanSpec::named(*op, n_qubits - 1));
    Circuit c = instantiate(t, a);
    require_ok(c, kind, n_qubits);
    auto prov = template_provenance(t, a);
    prov.insert(prov.begin(), head);
    return {kind, n_qubits, std::move(c), std::move(t), std::move(a), std::move(prov)};
  }

  if (kind == OperatorKind::CV || kind == OperatorKind::CVdg) {
    Template t = make_template(n_qubits);
    const std::size_t rows = std::size_t{1} << (n_qubits - 1);
    std::vector<Angle> phases(rows, Angle::zero());
    phases.back() = Angle::fraction(kind == OperatorKind::CV ? 1 : -1, 2);
    const std::int64_t den = std::int64_t{1} << n_qubits;
    const std::vector<Angle> candidates{Angle::fraction(-1, den), Angle::fraction(1, den)};
    auto a = solve_phases(t, phases, candidates, false);
    if (!a) throw SynthesisError("no phase assignment for " + to_string(kind));
    Circuit c = instantiate(t, *a);
    require_ok(c, kind, n_qubits);
    auto prov = template_provenance(t, *a);
    prov.insert(prov.begin(), head);
    return {kind, n_qubits, std::move(c), std::move(t), std::move(*a), std::move(prov)};
  }

  if (kind == OperatorKind::Fredkin) {
    const Template t = make_template(n_qubits);
    const Circuit tof = instantiate(t, toffoli_assignment_cached(n_qubits));
    const Qubit t2 = t.wires.target;
    const Qubit t1 = t.wires.controls.back();
    Circuit c(static_cast<std::size_t>(n_qubits));
    c.add(Gate::cx(t2, t1)).append(tof).add(Gate::cx(t2, t1));
    require_ok(c, kind, n_qubits);
    std::vector<Qubit> ctrl(t.wires.controls.begin(), t.wires.controls.end() - 1);
    std::vector<std::string> prov{
        head,
        "construction: cx(q" + std::to_string(t2) + "->q" + std::to_string(t1) + ") . toffoli(" + std::to_string(n_qubits) +
            ") . cx(q" + std::to_string(t2) + "->q" + std::to_string(t1) + ")",
        "wires: controls " + join_wires(ctrl) + ", swap q" + std::to_string(t1) + "<->q" + std::to_string(t2),
        "toffoli thetas: " + toffoli_assignment_cached(n_qubits).thetas_to_string(),
    };
    return {kind, n_qubits, std::move(c), std::nullopt, std::nullopt, std::move(prov)};
  }

  // Miller, 4 qubits: A . B . A^dagger with A = toffoli on (q0, q1, q2)
  // targeting q1 and B = toffoli on (q1, q2, q3) targeting q2.
  const Circuit tof3 = instantiate(make_template(3), toffoli_assignment_cached(3));
  const std::vector<Qubit> wa{0, 1, 2};
  const std::vector<Qubit> wb{1, 2, 3};
  const Circuit a = remap(tof3, wa, 4);
  const Circuit b = remap(tof3, wb, 4);
  Circuit c(4);
  c.append(a).append(b).append(circuit_inverse(a));
  require_ok(c, kind, n_qubits);
  std::vector<std::string> prov{
      head,
      "construction: A . B . A† with A = toffoli(3) on q0,q1,q2 (target q1), B = toffoli(3) on q1,q2,q3 (target q2)",
      "function: q1 ^= q0 q2; q2 ^= q1 q3; q1 ^= q0 q2",
  };
  return {kind, n_qubits, std::move(c), std::nullopt, std::nullopt, std::move(prov)};
}

SynthesisResult synth_truth_table(const TruthTable& table) {
  const int n = table.n_controls + 1;
  if (n < 2 || n > 5) throw SynthesisError("truth tables are supported for 1 to 4 controls");
  if (table.outputs.size() != (std::size_t{1} << table.n_controls)) throw SynthesisError("truth table has the wrong row count");
  Template t = make_template(n);
  ThetaAssignment a = solve_thetas(t, BooleanSpec::from_table(table));
  Circuit c = instantiate(t, a);
  const Verification v = verify_truth_table(c, table);
  if (!v.ok) throw SynthesisError("self-check failed for truth table " + table.to_string() + ": " + v.detail);
  auto prov = template_provenance(t, a);
  prov.insert(prov.begin(), "truth table: " + table.to_string());
  return {OperatorKind::Toffoli, n, std::move(c), std::move(t), std::move(a), std::move(prov)};
}

// ---------------------------------------------------------------------------
// Verification

Verification verify_truth_table(const Circuit& c, const TruthTable& expected) {
  try {
    const TruthTable got = boolean_action(c, expected.n_controls);
    if (got == expected) return {true, "truth table " + got.to_string()};
    return {false, "truth table " + got.to_string() + ", expected " + expected.to_string()};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

std::vector<std::uint64_t> reference_permutation(OperatorKind kind, int n_qubits) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<std::uint64_t> perm(dim);
  const auto bit = [](std::uint64_t x, unsigned q) { return (x >> q) & 1U; };
  if (kind == OperatorKind::Fredkin && (n_qubits == 3 || n_qubits == 4)) {
    const WireAssignment w = standard_wires(n_qubits);
    const unsigned t1 = w.controls.back();
    const unsigned t2 = w.target;
    for (std::uint64_t x = 0; x < dim; ++x) {
      bool all = true;
      for (std::size_t k = 0; k + 1 < w.controls.size(); ++k) all = all && bit(x, w.controls[k]);
      std::uint64_t y = x;
      if (all && bit(x, t1) != bit(x, t2)) y ^= (std::uint64_t{1} << t1) | (std::uint64_t{1} << t2);
      perm[x] = y;
    }
    return perm;
  }
  if (kind == OperatorKind::Miller && n_qubits == 4) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      std::uint64_t y = x;
      y ^= (bit(y, 0) & bit(y, 2)) << 1;
      y ^= (bit(y, 1) & bit(y, 3)) << 2;
      y ^= (bit(y, 0) & bit(y, 2)) << 1;
      perm[x] = y;
    }
    return perm;
  }
  throw SynthesisError("no reference permutation for " + to_string(kind) + "(" + std::to_string(n_qubits) + ")");
}

namespace {

Verification verify_controlled_root(const Circuit& c, OperatorKind kind, int n) {
  const WireAssignment w = standard_wires(n);
  const std::size_t rows = std::size_t{1} << (n - 1);
  const double r = 0.5;
  const Complex v0 = kind == OperatorKind::CV ? Complex{r, r} : Complex{r, -r};
  const Complex v1 = std::conj(v0);
  constexpr double kTol = 1e-9;
  for (std::uint64_t x = 0; x < rows; ++x) {
    const std::uint64_t in = basis_index(w, x, false);
    const StateVector out = apply(c, StateVector::basis(static_cast<std::size_t>(n), in));
    Complex overlap;
    if (x == rows - 1) {
      overlap = std::conj(v0) * out[in] + std::conj(v1) * out[basis_index(w, x, true)];
    } else {
      overlap = out[in];
    }
    if (std::abs(std::abs(overlap) - 1.0) > kTol) {
      std::ostringstream os;
      os << "control input " << x << ": overlap " << std::abs(overlap);
      return {false, os.str()};
    }
  }
  return {true, "controlled root on target-|0> inputs"};
}

}  // namespace

Verification verify_operator(const Circuit& c, OperatorKind kind, int n_qubits) {
  if (c.n_qubits() != static_cast<std::size_t>(n_qubits)) {
    return {false, "circuit has " + std::to_string(c.n_qubits()) + " qubits, expected " + std::to_string(n_qubits)};
  }
  try {
    if (const auto op = boolean_op(kind)) return verify_truth_table(c, truth_table(*op, n_qubits - 1));
    if (kind == OperatorKind::CV || kind == OperatorKind::CVdg) return verify_controlled_root(c, kind, n_qubits);
    const auto expected = reference_permutation(kind, n_qubits);
    const auto got = basis_permutation(c);
    if (!got) return {false, "circuit is not a basis permutation"};
    for (std::size_t x = 0; x < expected.size(); ++x) {
      if ((*got)[x] != expected[x]) {
        return {false, "basis state " + std::to_string(x) + " maps to " + std::to_string((*got)[x]) + ", expected " +
                           std::to_string(expected[x])};
      }
    }
    return {true, "basis permutation matches"};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

}  // namespace bsa
