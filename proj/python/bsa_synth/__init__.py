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
"""Bloch sphere approach gate synthesis: symmetric-template operators,
exact phase traces, native lowering and layout-aware cost."""

from ._bsa import (
    BsaError,
    Circuit,
    conventional,
    cost,
    lower,
    parse_circuit,
    synth,
    synth_truth_table,
    trace,
    truth_table,
    verify,
    wtqc,
)

__all__ = [
    "BsaError",
    "Circuit",
    "conventional",
    "cost",
    "lower",
    "parse_circuit",
    "synth",
    "synth_truth_table",
    "trace",
    "truth_table",
    "verify",
    "wtqc",
]
