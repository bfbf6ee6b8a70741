# Copyright 2026 The bsa-synth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exit-code, output and determinism contract of the bsa command-line tool."""

import os
import subprocess

import pytest

CLI = os.environ["BSA_CLI"]

TRACE_HEADER = "|c2 c1>  SP1(H)  θ1(T†)  CNOT2  θ2(T)  CNOT1  θ3(T†)  CNOT2  θ4(T)  SP2(H)  Output"


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, check=False)


def key_values(stdout):
    pairs = {}
    for line in stdout.splitlines():
        if "=" in line and " " not in line.split("=", 1)[0]:
            key, value = line.split("=", 1)
            pairs[key] = value
    return pairs


@pytest.fixture
def circuit_file(tmp_path):
    def make(op, n):
        path = tmp_path / f"{op}{n}.circ"
        result = run("synth", "--op", op, "--n", str(n), "--out", str(path))
        assert result.returncode == 0, result.stderr
        return str(path)

    return make


def test_synth_writes_provenance_header():
    result = run("synth", "--op", "or", "--n", "3")
    assert result.returncode == 0
    assert "# thetas: T T T T" in result.stdout
    assert "# ax2: Z, sp1: H, sp2: H" in result.stdout
    assert "qubits 3" in result.stdout


def test_synth_out_of_range_is_usage_error():
    result = run("synth", "--op", "toffoli", "--n", "7")
    assert result.returncode == 2
    assert "toffoli" in result.stderr


def test_unknown_operator_and_flags():
    assert run("synth", "--op", "xor", "--n", "3").returncode == 2
    assert run("synth", "--op", "and", "--n", "3", "--bogus").returncode == 2
    assert run().returncode == 2


@pytest.mark.parametrize(
    "op,n,against",
    [
        ("toffoli", 3, ["--op", "toffoli"]),
        ("nand", 3, ["--table", "TTTF"]),
        ("fredkin", 3, ["--op", "fredkin"]),
        ("miller", 4, ["--op", "miller"]),
        ("cv", 2, ["--op", "cv"]),
    ],
)
def test_verify_passes(circuit_file, op, n, against):
    result = run("verify", "--in", circuit_file(op, n), *against)
    assert result.returncode == 0, result.stdout + result.stderr
    assert key_values(result.stdout)["verified"] == "true"


def test_verify_wrong_spec_exits_one(circuit_file):
    result = run("verify", "--in", circuit_file("toffoli", 3), "--op", "or")
    assert result.returncode == 1
    assert key_values(result.stdout)["verified"] == "false"


def test_verify_missing_file_and_bad_circuit(tmp_path):
    assert run("verify", "--in", str(tmp_path / "none.circ"), "--op", "or").returncode == 2
    bad = tmp_path / "bad.circ"
    bad.write_text("qubits 3\nccx 0 1 2\n")
    result = run("verify", "--in", str(bad), "--op", "and")
    assert result.returncode == 2
    assert "line 2" in result.stderr


def test_trace_golden_last_row():
    result = run("trace", "--op", "toffoli", "--n", "3", "--style", "states")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == TRACE_HEADER
    assert lines[5].split() == ["|1", "1>", "|+>", "7π/4", "π/4", "|+i>", "|-i>", "5π/4", "3π/4", "|->", "|1>", "True"]
    assert lines[3].split()[-1] == "False"


def test_trace_rejects_non_template_circuit(circuit_file):
    assert run("trace", "--in", circuit_file("fredkin", 3)).returncode == 2


def test_cost_key_values():
    result = run("cost", "--op", "cv", "--n", "2")
    assert result.returncode == 0
    kv = key_values(result.stdout)
    assert kv["xc"] == "0"
    assert kv["n2"] == "1"
    assert float(kv["wtqc"]) == int(kv["n1"]) + int(kv["n2"]) + int(kv["xc"]) + int(kv["d"])
    zero = key_values(run("cost", "--op", "cv", "--n", "2", "--weights", "0,0,0,0").stdout)
    assert zero["wtqc"] == "0"


def test_cost_layout_options(tmp_path):
    mapped = run("cost", "--op", "toffoli", "--n", "3", "--map", "15,19,20")
    assert mapped.returncode == 0
    assert key_values(mapped.stdout)["xc"] == "0"
    hexed = run("cost", "--op", "and", "--n", "3", "--heavy-hex", "1x1")
    assert hexed.returncode == 0
    assert run("cost", "--op", "and", "--n", "3", "--heavy-hex", "1x1", "--layout", "x").returncode == 2
    assert run("cost", "--op", "and", "--n", "3", "--weights", "1,-1,1,1").returncode == 2
    assert run("cost", "--op", "and", "--n", "3", "--xc-mode", "gates").returncode == 2
    assert run("cost", "--op", "and", "--n", "3", "--map", "0,0,1").returncode == 2
    basis = os.path.join(os.environ["BSA_TEST_DATA_DIR"], "rz_sx_cx.basis")
    custom = run("cost", "--op", "and", "--n", "3", "--basis", basis)
    assert custom.returncode == 0
    assert key_values(custom.stdout)["basis"] == "rz_sx_cx"


def test_cost_cnots_mode_on_spread_mapping(tmp_path):
    path = tmp_path / "line.layout"
    path.write_text("edge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\n")
    circ = tmp_path / "cx.circ"
    circ.write_text("qubits 2\ncx 0 1\n")
    swaps = key_values(run("cost", "--in", str(circ), "--layout", str(path), "--map", "0,3").stdout)
    cnots = key_values(
        run("cost", "--in", str(circ), "--layout", str(path), "--map", "0,3", "--xc-mode", "cnots").stdout
    )
    assert swaps["xc"] == "2"
    assert cnots["xc"] == "6"
    assert swaps["n2"] == cnots["n2"] == "1"


def test_compare_reports_both_designs():
    result = run("compare", "--op", "and", "--n", "3")
    assert result.returncode == 0
    kv = key_values(result.stdout)
    assert kv["bsa_xc"] == "0"
    assert int(kv["conv_n2"]) > int(kv["bsa_n2"])


@pytest.mark.parametrize(
    "args",
    [
        ["synth", "--op", "miller", "--n", "4"],
        ["trace", "--op", "nor", "--n", "3"],
        ["cost", "--op", "fredkin", "--n", "4"],
        ["compare", "--op", "cv", "--n", "2"],
    ],
)
def test_determinism(args):
    first = run(*args)
    second = run(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
