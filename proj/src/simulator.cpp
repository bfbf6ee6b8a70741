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

#include "bsa/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "bsa/error.hpp"
#include "bsa/wires.hpp"

namespace bsa {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kStructureTol = 1e-10;
constexpr double kBooleanTol = 1e-9;

void apply_single(std::span<Complex> amps, Qubit q, const std::array<Complex, 4>& m) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = m[0] * a0 + m[1] * a1;
      amps[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void apply_gate(std::span<Complex> amps, const Gate& g) {
  if (g.arity() == 1) {
    if (g.kind == GateKind::I) return;
    apply_single(amps, g.qubits[0], single_qubit_matrix(g));
    return;
  }
  const std::size_t a = std::size_t{1} << g.qubits[0];
  const std::size_t b = std::size_t{1} << g.qubits[1];
  for (std::size_t i = 0; i < amps.size(); ++i) {
    switch (g.kind) {
      case GateKind::CX:
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[i | b]);
        break;
      case GateKind::CZ:
        if ((i & a) && (i & b)) amps[i] = -amps[i];
        break;
      case GateKind::SWAP:
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[(i & ~a) | b]);
        break;
      default:
        break;
    }
  }
}

void check_width(const Gate& g, std::size_t n_qubits) {
  for (int i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= n_qubits) throw SimulationError("gate '" + to_string(g) + "' is outside the register");
  }
}

}  // namespace

std::array<Complex, 4> single_qubit_matrix(const Gate& g) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (g.kind) {
    case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -kI, kI, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::SX: {
      const Complex p{0.5, 0.5}, m{0.5, -0.5};
      return {p, m, m, p};
    }
    case GateKind::SXdg: {
      const Complex p{0.5, 0.5}, m{0.5, -0.5};
      return {m, p, p, m};
    }
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
      return {1.0, 0.0, 0.0, std::exp(kI * g.z_rotation()->radians())};
    case GateKind::RZ: {
      const double half = g.angle.radians() / 2.0;
      return {std::exp(-kI * half), 0.0, 0.0, std::exp(kI * half)};
    }
    case GateKind::RX: {
      const double half = g.angle.radians() / 2.0;
      return {std::cos(half), -kI * std::sin(half), -kI * std::sin(half), std::cos(half)};
    }
    default:
      throw SimulationError("'" + std::string(mnemonic(g.kind)) + "' is not a single-qubit gate");
  }
}

// --- StateVector -----------------------------------------------------------

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxStateQubits) {
    throw SimulationError("state vectors support 1.." + std::to_string(kMaxStateQubits) + " qubits");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw SimulationError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) throw SimulationError("amplitude count must be a power of two");
  StateVector s(static_cast<std::size_t>(std::countr_zero(dim)));
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

void StateVector::apply(const Gate& g) {
  check_width(g, n_qubits_);
  apply_gate(amplitudes_, g);
}

// --- UnitaryMatrix ---------------------------------------------------------

UnitaryMatrix UnitaryMatrix::identity(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxUnitaryQubits) {
    throw SimulationError("unitary simulation supports 1.." + std::to_string(kMaxUnitaryQubits) +
                          " qubits, got " + std::to_string(n_qubits));
  }
  UnitaryMatrix m(n_qubits, std::size_t{1} << n_qubits);
  for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = 1.0;
  return m;
}

void UnitaryMatrix::apply(const Gate& g) {
  check_width(g, n_qubits_);
  for (std::size_t col = 0; col < dim_; ++col) {
    apply_gate(std::span<Complex>(data_.data() + col * dim_, dim_), g);
  }
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix out(n_qubits_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim_ != b.dim_) throw SimulationError("matrix dimension mismatch");
  UnitaryMatrix out(a.n_qubits_, a.dim_);
  for (std::size_t c = 0; c < a.dim_; ++c) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const Complex bk = b(k, c);
      if (bk == Complex{}) continue;
      for (std::size_t r = 0; r < a.dim_; ++r) out(r, c) += a(r, k) * bk;
    }
  }
  return out;
}

std::vector<Complex> UnitaryMatrix::operator*(std::span<const Complex> v) const {
  if (v.size() != dim_) throw SimulationError("vector dimension mismatch");
  std::vector<Complex> out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r < dim_; ++r) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

double UnitaryMatrix::unitarity_error() const {
  const UnitaryMatrix product = *this * adjoint();
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      worst = std::max(worst, std::abs(product(r, c) - (r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

UnitaryMatrix UnitaryMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t dim = rows.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) throw SimulationError("matrix dimension must be a power of two");
  UnitaryMatrix m(static_cast<std::size_t>(std::countr_zero(dim)), dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw SimulationError("matrix must be square");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

UnitaryMatrix unitary_of(const Circuit& c) {
  UnitaryMatrix u = UnitaryMatrix::identity(c.n_qubits());
  for (const Gate& g : c.gates()) u.apply(g);
  return u;
}

StateVector apply(const Circuit& c, StateVector s) {
  if (c.n_qubits() != s.n_qubits()) {
    throw SimulationError("circuit has " + std::to_string(c.n_qubits()) + " qubits but the state has " +
                          std::to_string(s.n_qubits()));
  }
  for (const Gate& g : c.gates()) s.apply(g);
  return s;
}

std::optional<Complex> global_phase_between(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
  if (u.dimension() != v.dimension()) return std::nullopt;
  std::size_t best_r = 0, best_c = 0;
  double best = -1.0;
  for (std::size_t c = 0; c < v.dimension(); ++c) {
    for (std::size_t r = 0; r < v.dimension(); ++r) {
      if (std::abs(v(r, c)) > best + 1e-12) {
        best = std::abs(v(r, c));
        best_r = r;
        best_c = c;
      }
    }
  }
  if (best <= 0.0 || std::abs(u(best_r, best_c)) <= 0.0) return std::nullopt;
  Complex lambda = u(best_r, best_c) / v(best_r, best_c);
  lambda /= std::abs(lambda);
  for (std::size_t c = 0; c < v.dimension(); ++c) {
    for (std::size_t r = 0; r < v.dimension(); ++r) {
      if (std::abs(u(r, c) - lambda * v(r, c)) > tol) return std::nullopt;
    }
  }
  return lambda;
}

bool equiv_up_to_global_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
  return global_phase_between(u, v, tol).has_value();
}

std::string to_string(const SignedPauli& p) {
  const char* names[] = {"X", "Y", "Z"};
  return std::string(p.sign < 0 ? "-" : "+") + names[static_cast<int>(p.pauli)];
}

SignedPauli clifford_conjugate(const Circuit& clifford, Pauli p) {
  if (clifford.n_qubits() != 1) throw SimulationError("clifford_conjugate expects a single-qubit circuit");
  const GateKind pauli_kinds[] = {GateKind::X, GateKind::Y, GateKind::Z};
  const UnitaryMatrix c = unitary_of(clifford);
  const UnitaryMatrix pm = unitary_of(Circuit(1, {Gate::single(pauli_kinds[static_cast<int>(p)], 0)}));
  const UnitaryMatrix result = c * pm * c.adjoint();
  for (Pauli candidate : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const UnitaryMatrix q = unitary_of(Circuit(1, {Gate::single(pauli_kinds[static_cast<int>(candidate)], 0)}));
    for (int sign : {1, -1}) {
      bool match = true;
      for (std::size_t r = 0; r < 2 && match; ++r) {
        for (std::size_t col = 0; col < 2 && match; ++col) {
          match = std::abs(result(r, col) - static_cast<double>(sign) * q(r, col)) <= kStructureTol;
        }
      }
      if (match) return {sign, candidate};
    }
  }
  throw SimulationError("conjugation result is not a signed Pauli; the gate is not Clifford");
}

// --- phase tracking --------------------------------------------------------

std::vector<TraceEvent> phase_track(const Circuit& c, Qubit target, std::uint64_t input) {
  if (target >= c.n_qubits()) throw SimulationError("target outside the circuit");
  if ((input >> target) & 1U) throw SimulationError("phase tracking starts from target |0>");
  const auto fail = [](const std::string& why) {
    throw SimulationError("not equator-trackable: " + why);
  };

  std::vector<std::size_t> on_target;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.acts_on(target)) {
      on_target.push_back(i);
    } else {
      fail("gate '" + to_string(g) + "' acts only on a control");
    }
  }
  if (on_target.size() < 2 || c.gates()[on_target.front()].kind != GateKind::H ||
      c.gates()[on_target.back()].kind != GateKind::H) {
    fail("the target must open and close with H");
  }

  std::vector<TraceEvent> events;
  Angle phase;
  for (std::size_t k = 1; k + 1 < on_target.size(); ++k) {
    const std::size_t idx = on_target[k];
    const Gate& g = c.gates()[idx];
    if (g.kind == GateKind::I) continue;
    if (const auto rotation = g.z_rotation()) {
      phase += *rotation;
      events.push_back({TraceEvent::Kind::Rotation, idx, 0, true, phase});
      continue;
    }
    if (g.kind == GateKind::CX && g.qubits[1] == target) {
      const Qubit control = g.qubits[0];
      const bool active = (input >> control) & 1U;
      if (active) phase = -phase;
      events.push_back({TraceEvent::Kind::Cnot, idx, control, active, phase});
      continue;
    }
    if (g.kind == GateKind::CZ) {
      const Qubit control = g.qubits[0] == target ? g.qubits[1] : g.qubits[0];
      const bool active = (input >> control) & 1U;
      if (active) phase += Angle::pi();
      events.push_back({TraceEvent::Kind::ControlledZ, idx, control, active, phase});
      continue;
    }
    fail("gate '" + to_string(g) + "' is not a Z rotation or a controlled flip of the target");
  }
  return events;
}

std::optional<bool> equator_output(Angle phase) {
  if (phase.is_zero()) return false;
  if (phase == Angle::pi()) return true;
  return std::nullopt;
}

// --- Boolean behaviour -----------------------------------------------------

TruthTable TruthTable::from_bits(int n_controls, std::uint64_t bits) {
  TruthTable t;
  t.n_controls = n_controls;
  t.outputs.resize(std::size_t{1} << n_controls);
  for (std::size_t i = 0; i < t.outputs.size(); ++i) t.outputs[i] = (bits >> i) & 1U;
  return t;
}

TruthTable TruthTable::complement() const {
  TruthTable t = *this;
  t.outputs.flip();
  return t;
}

std::string TruthTable::to_string() const {
  std::string out;
  for (bool b : outputs) out += b ? 'T' : 'F';
  return out;
}

TruthTable boolean_action(const Circuit& c, Qubit target, std::span<const Qubit> controls) {
  if (controls.size() + 1 != c.n_qubits()) {
    throw SimulationError("expected " + std::to_string(controls.size() + 1) + " qubits, circuit has " +
                          std::to_string(c.n_qubits()));
  }
  TruthTable table;
  table.n_controls = static_cast<int>(controls.size());
  table.outputs.resize(std::size_t{1} << controls.size());
  for (std::uint64_t x = 0; x < table.outputs.size(); ++x) {
    std::uint64_t input = 0;
    for (std::size_t k = 0; k < controls.size(); ++k) {
      if ((x >> k) & 1U) input |= std::uint64_t{1} << controls[k];
    }
    const StateVector out = apply(c, StateVector::basis(c.n_qubits(), input));
    const std::uint64_t flipped = input | (std::uint64_t{1} << target);
    const double p0 = std::norm(out[input]);
    const double p1 = std::norm(out[flipped]);
    if (std::abs(p0 - 1.0) <= kBooleanTol) {
      table.outputs[x] = false;
    } else if (std::abs(p1 - 1.0) <= kBooleanTol) {
      table.outputs[x] = true;
    } else {
      throw SimulationError("not a Boolean operator: input " + std::to_string(x) +
                            " leaves the target in superposition or changes a control");
    }
  }
  return table;
}

TruthTable boolean_action(const Circuit& c, int n_controls) {
  const WireAssignment wires = standard_wires(n_controls + 1);
  return boolean_action(c, wires.target, wires.controls);
}

std::optional<std::vector<std::uint64_t>> basis_permutation(const Circuit& c, double tol) {
  const std::size_t dim = std::size_t{1} << c.n_qubits();
  std::vector<std::uint64_t> image(dim);
  std::vector<bool> hit(dim, false);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const StateVector out = apply(c, StateVector::basis(c.n_qubits(), x));
    std::optional<std::uint64_t> found;
    for (std::uint64_t y = 0; y < dim; ++y) {
      if (std::abs(std::norm(out[y]) - 1.0) <= tol) {
        found = y;
        break;
      }
    }
    if (!found || hit[*found]) return std::nullopt;
    hit[*found] = true;
    image[x] = *found;
  }
  return image;
}

}  // namespace bsa
