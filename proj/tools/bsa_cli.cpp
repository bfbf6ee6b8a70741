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

// bsa: synthesize, verify, trace and cost BSA operators.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bsa/circuit_io.hpp"
#include "bsa/conventional.hpp"
#include "bsa/error.hpp"
#include "bsa/pipeline.hpp"
#include "bsa/report.hpp"
#include "bsa/synth.hpp"

#ifndef BSA_DATA_DIR
#define BSA_DATA_DIR "data"
#endif

namespace {

using namespace bsa;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

/// Bad input from the command line or an input file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string op;
  int n = 0;
  std::string table;
  std::string in;
  std::string out;
  std::string layout;
  std::string heavy_hex;
  std::string map;
  std::string weights = "1,1,1,1";
  std::string xc_mode = "swaps";
  std::string basis;
  std::string style = "phases";
};

OperatorKind require_op(const Options& o) {
  const auto kind = parse_operator(o.op);
  if (!kind) throw UsageError("unknown operator '" + o.op + "'");
  return *kind;
}

void require_range(OperatorKind kind, int n) {
  const auto [lo, hi] = supported_range(kind);
  if (n < lo || n > hi) {
    throw UsageError("unsupported operator size: " + to_string(kind) + " with n=" + std::to_string(n) + " (supported " +
                     std::to_string(lo) + ".." + std::to_string(hi) + ")");
  }
}

TruthTable require_table(const std::string& text) {
  try {
    return parse_truth_table(text);
  } catch (const SynthesisError& e) {
    throw UsageError(e.what());
  }
}

/// Circuit named by --op/--n, --table or --in, with its wires.
struct Subject {
  std::string name;
  Circuit circuit{1};
  WireAssignment wires;
  std::optional<OperatorKind> kind;
  std::vector<std::string> provenance;
};

Subject load_subject(const Options& o) {
  const int given = (!o.op.empty()) + (!o.table.empty()) + (!o.in.empty());
  if (given != 1) throw UsageError("give exactly one of --op, --table or --in");
  Subject s;
  if (!o.in.empty()) {
    s.circuit = load_circuit(o.in);
    s.name = o.in;
    try {
      s.wires = standard_wires(static_cast<int>(s.circuit.n_qubits()));
    } catch (const CircuitError&) {
      s.wires = {0, {}};
    }
    return s;
  }
  if (!o.table.empty()) {
    const TruthTable tt = require_table(o.table);
    if (tt.n_controls > 4) throw UsageError("truth tables are supported for 1 to 4 controls");
    SynthesisResult r{OperatorKind::Toffoli, 0, Circuit(1), {}, {}, {}};
    try {
      r = synth_truth_table(tt);
    } catch (const SynthesisError& e) {
      throw UsageError(e.what());
    }
    s.name = "table " + o.table;
    s.circuit = r.circuit;
    s.wires = r.templ->wires;
    s.provenance = r.provenance;
    return s;
  }
  const OperatorKind kind = require_op(o);
  require_range(kind, o.n);
  const auto r = synth(kind, o.n);
  s.name = to_string(kind);
  s.kind = kind;
  s.circuit = r.circuit;
  s.wires = standard_wires(o.n);
  s.provenance = r.provenance;
  return s;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

// ---------------------------------------------------------------------------

int run_synth(const Options& o) {
  const Subject s = load_subject(o);
  if (!o.in.empty()) throw UsageError("synth takes --op or --table, not --in");
  write_output(o, emit_circuit(s.circuit, s.provenance));
  if (!o.out.empty()) {
    KeyValueBlock kv;
    kv.add("command", std::string("synth")).add("subject", s.name).add("qubits", static_cast<int>(s.circuit.n_qubits()));
    kv.add("gates", static_cast<int>(s.circuit.size())).add("out", o.out);
    std::cout << kv.str();
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  if (o.in.empty()) throw UsageError("verify needs --in FILE");
  if (o.op.empty() == o.table.empty()) throw UsageError("verify needs exactly one of --op or --table");
  const Circuit c = load_circuit(o.in);
  const int width = static_cast<int>(c.n_qubits());
  Verification v;
  std::string against;
  if (!o.op.empty()) {
    const OperatorKind kind = require_op(o);
    const int n = o.n ? o.n : width;
    require_range(kind, n);
    if (n != width) throw UsageError("circuit has " + std::to_string(width) + " qubits, operator expects " + std::to_string(n));
    v = verify_operator(c, kind, n);
    against = to_string(kind);
  } else {
    const TruthTable tt = require_table(o.table);
    if (tt.n_controls + 1 != width) {
      throw UsageError("circuit has " + std::to_string(width) + " qubits, table expects " + std::to_string(tt.n_controls + 1));
    }
    v = verify_truth_table(c, tt);
    against = "table " + tt.to_string();
  }
  std::ostringstream out;
  out << (v.ok ? "PASS" : "FAIL") << ": " << o.in << " against " << against << ": " << v.detail << "\n\n";
  KeyValueBlock kv;
  kv.add("command", std::string("verify")).add("circuit", o.in).add("against", against);
  kv.add("verified", std::string(v.ok ? "true" : "false"));
  out << kv.str();
  write_output(o, out.str());
  return v.ok ? kExitOk : kExitVerifyFailed;
}

int run_trace(const Options& o) {
  const auto style = parse_trace_style(o.style);
  if (!style) throw UsageError("unknown trace style '" + o.style + "'");
  const Subject s = load_subject(o);
  if (s.wires.controls.empty()) throw UsageError("trace needs a 2..5 qubit circuit on the standard wires");
  TraceTable table;
  try {
    table = trace_table(s.circuit, s.wires, *style);
  } catch (const SimulationError& e) {
    throw UsageError(e.what());
  }
  std::string outputs;
  for (const auto& b : table.outputs) outputs += b ? (*b ? 'T' : 'F') : '?';
  std::ostringstream out;
  out << render_trace(table) << '\n';
  KeyValueBlock kv;
  kv.add("command", std::string("trace")).add("subject", s.name).add("style", o.style).add("outputs", outputs);
  out << kv.str();
  write_output(o, out.str());
  return kExitOk;
}

struct CostSetup {
  Layout layout;
  std::string layout_name;
  std::optional<Mapping> mapping;
  CostOptions options;
};

CostSetup cost_setup(const Options& o) {
  CostSetup s;
  if (!o.layout.empty() && !o.heavy_hex.empty()) throw UsageError("give at most one of --layout and --heavy-hex");
  if (!o.heavy_hex.empty()) {
    int rows = 0;
    int cols = 0;
    char x = 0;
    std::istringstream in(o.heavy_hex);
    std::string rest;
    if (!(in >> rows >> x >> cols) || (x != 'x' && x != 'X') || (in >> rest) || rows < 1 || cols < 1) {
      throw UsageError("--heavy-hex expects RxC, e.g. 2x3");
    }
    s.layout = Layout::heavy_hex(rows, cols);
    s.layout_name = "heavy-hex " + std::to_string(rows) + "x" + std::to_string(cols);
  } else {
    const std::string path = o.layout.empty() ? std::string(BSA_DATA_DIR) + "/ibm_torino.layout" : o.layout;
    s.layout = Layout::load(path);
    s.layout_name = o.layout.empty() ? "ibm_torino.layout" : o.layout;
  }
  if (!o.map.empty()) s.mapping = Mapping::parse(o.map);
  try {
    s.options.weights = Weights::parse(o.weights);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto mode = parse_xc_mode(o.xc_mode);
  if (!mode) throw UsageError("--xc-mode must be swaps or cnots");
  s.options.xc_mode = *mode;
  if (!o.basis.empty()) s.options.basis = NativeBasis::load(o.basis);
  return s;
}

std::string weights_text(const Weights& w) {
  return format_number(w.w1) + "," + format_number(w.w2) + "," + format_number(w.w3) + "," + format_number(w.w4);
}

std::vector<std::string> count_cells(const std::string& label, const CostCounts& c, double total) {
  return {label, std::to_string(c.n1), std::to_string(c.n2), std::to_string(c.xc), std::to_string(c.d), format_number(total)};
}

void add_counts(KeyValueBlock& kv, const std::string& prefix, const CostCounts& c, double total) {
  kv.add(prefix + "n1", c.n1).add(prefix + "n2", c.n2).add(prefix + "xc", c.xc).add(prefix + "d", c.d).add(prefix + "wtqc", total);
}

std::string deviations(const CostCounts& got, const CostCounts& ref) {
  std::string out;
  const auto check = [&](const char* name, int a, int b) {
    if (a == b) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  check("n1", got.n1, ref.n1);
  check("n2", got.n2, ref.n2);
  check("xc", got.xc, ref.xc);
  check("d", got.d, ref.d);
  return out.empty() ? "none" : out;
}

void describe_setup(std::ostringstream& out, KeyValueBlock& kv, const CostSetup& s, const Subject& subj) {
  out << "subject   " << subj.name << " (" << subj.circuit.n_qubits() << " qubits)\n";
  out << "layout    " << s.layout_name << " (" << s.layout.size() << " qubits, " << s.layout.edges().size() << " edges)\n";
  out << "basis     " << s.options.basis.name() << "\n";
  out << "weights   " << weights_text(s.options.weights) << "\n";
  out << "xc mode   " << to_string(s.options.xc_mode) << "\n";
  kv.add("subject", subj.name).add("qubits", static_cast<int>(subj.circuit.n_qubits())).add("layout", s.layout_name);
  kv.add("basis", s.options.basis.name()).add("weights", weights_text(s.options.weights));
  kv.add("xc_mode", to_string(s.options.xc_mode));
}

int run_cost(const Options& o) {
  const Subject subj = load_subject(o);
  const CostSetup s = cost_setup(o);
  const CostResult r = evaluate_cost(subj.circuit, s.layout, s.mapping, s.options);
  const CostCounts& c = r.report.counts;

  std::ostringstream out;
  KeyValueBlock kv;
  kv.add("command", std::string("cost"));
  describe_setup(out, kv, s, subj);
  out << "mapping   " << r.initial_mapping.to_string() << (s.mapping ? " (explicit)" : " (auto)") << "\n\n";
  std::vector<std::vector<std::string>> rows{count_cells("bsa", c, r.report.wtqc)};
  const auto ref = subj.kind ? reference_cost(*subj.kind, static_cast<int>(subj.circuit.n_qubits())) : std::nullopt;
  if (ref) rows.push_back(count_cells("reference", ref->bsa, ref->bsa_wtqc));
  out << render_columns({"", "N1", "N2", "XC", "D", "WTQC"}, rows);
  if (ref) out << "deviation from reference: " << deviations(c, ref->bsa) << "\n";
  out << '\n';

  kv.add("mapping", r.initial_mapping.to_string()).add("final_mapping", r.final_mapping.to_string());
  kv.add("swaps", r.swaps);
  add_counts(kv, "", c, r.report.wtqc);
  if (ref) {
    add_counts(kv, "ref_", ref->bsa, ref->bsa_wtqc);
    kv.add("deviation", deviations(c, ref->bsa));
  }
  out << kv.str();
  write_output(o, out.str());
  return kExitOk;
}

int run_compare(const Options& o) {
  if (o.op.empty() || !o.in.empty() || !o.table.empty()) throw UsageError("compare needs --op and --n");
  const Subject subj = load_subject(o);
  const CostSetup s = cost_setup(o);
  const OperatorKind kind = *subj.kind;
  const Circuit baseline = conventional_circuit(kind, o.n);
  const Verification v = verify_operator(baseline, kind, o.n);
  if (!v.ok) throw std::logic_error("conventional decomposition failed its check: " + v.detail);
  const CostResult conv = evaluate_cost(baseline, s.layout, std::nullopt, s.options);
  const CostResult bsa = evaluate_cost(subj.circuit, s.layout, s.mapping, s.options);

  std::ostringstream out;
  KeyValueBlock kv;
  kv.add("command", std::string("compare"));
  describe_setup(out, kv, s, subj);
  out << "mapping   conventional " << conv.initial_mapping.to_string() << ", bsa " << bsa.initial_mapping.to_string() << "\n\n";
  std::vector<std::vector<std::string>> rows{count_cells("conventional", conv.report.counts, conv.report.wtqc),
                                             count_cells("bsa", bsa.report.counts, bsa.report.wtqc)};
  const auto ref = reference_cost(kind, o.n);
  if (ref) {
    rows.push_back(count_cells("reference conventional", ref->conventional, ref->conventional_wtqc));
    rows.push_back(count_cells("reference bsa", ref->bsa, ref->bsa_wtqc));
  }
  out << render_columns({"", "N1", "N2", "XC", "D", "WTQC"}, rows) << '\n';

  kv.add("conv_mapping", conv.initial_mapping.to_string()).add("bsa_mapping", bsa.initial_mapping.to_string());
  add_counts(kv, "conv_", conv.report.counts, conv.report.wtqc);
  add_counts(kv, "bsa_", bsa.report.counts, bsa.report.wtqc);
  if (ref) kv.add("bsa_deviation", deviations(bsa.report.counts, ref->bsa));
  out << kv.str();
  write_output(o, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch sphere approach gate synthesis"};
  app.require_subcommand(1);
  Options o;

  const auto subject_flags = [&](CLI::App* cmd) {
    cmd->add_option("--op", o.op, "Operator: toffoli, and, nand, or, nor, implication, inhibition, cv, cvdg, fredkin, miller");
    cmd->add_option("--n", o.n, "Qubit count");
    cmd->add_option("--table", o.table, "Explicit truth table, row 0 first (e.g. FFFT)");
  };
  const auto cost_flags = [&](CLI::App* cmd) {
    cmd->add_option("--layout", o.layout, "Layout file (default: bundled ibm_torino)");
    cmd->add_option("--heavy-hex", o.heavy_hex, "Generated heavy-hex layout RxC");
    cmd->add_option("--map", o.map, "Explicit mapping id,id,... (logical qubit order)");
    cmd->add_option("--weights", o.weights, "w1,w2,w3,w4 (default 1,1,1,1)");
    cmd->add_option("--xc-mode", o.xc_mode, "swaps or cnots");
    cmd->add_option("--basis", o.basis, "Native basis file");
  };

  auto* synth_cmd = app.add_subcommand("synth", "Synthesize an operator and write its circuit");
  subject_flags(synth_cmd);
  synth_cmd->add_option("--out", o.out, "Output circuit file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a circuit file against an operator or truth table");
  subject_flags(verify_cmd);
  verify_cmd->add_option("--in", o.in, "Circuit file")->required();
  verify_cmd->add_option("--out", o.out, "Report file (default stdout)");

  auto* trace_cmd = app.add_subcommand("trace", "Print the equator phase trace of a template circuit");
  subject_flags(trace_cmd);
  trace_cmd->add_option("--in", o.in, "Circuit file instead of --op");
  trace_cmd->add_option("--style", o.style, "phases or states");
  trace_cmd->add_option("--out", o.out, "Report file (default stdout)");

  auto* cost_cmd = app.add_subcommand("cost", "Transpile, place, route and cost a circuit");
  subject_flags(cost_cmd);
  cost_cmd->add_option("--in", o.in, "Circuit file instead of --op");
  cost_flags(cost_cmd);
  cost_cmd->add_option("--out", o.out, "Report file (default stdout)");

  auto* compare_cmd = app.add_subcommand("compare", "Cost the conventional decomposition and the BSA design side by side");
  subject_flags(compare_cmd);
  cost_flags(compare_cmd);
  compare_cmd->add_option("--out", o.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (synth_cmd->parsed()) return run_synth(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (trace_cmd->parsed()) return run_trace(o);
    if (cost_cmd->parsed()) return run_cost(o);
    if (compare_cmd->parsed()) return run_compare(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SynthesisError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const SimulationError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
