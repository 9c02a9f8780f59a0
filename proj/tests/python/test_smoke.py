# Copyright 2026 The ringcdc Authors. All Rights Reserved.
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
# ==============================================================================
"""Smoke tests for the Python bindings."""

import csv
import io
from fractions import Fraction

import pytest

import ringcdc


def test_worked_examples():
    assert ringcdc.ncl("allgather", 8, 2, 3) == 1
    assert ringcdc.ncl("alltoall", 8, 3, 1) == Fraction(11, 2)
    assert ringcdc.ncl("alltoall", 8, 4, 1, placement="appendix-c") == 2


def test_report_shape():
    report = ringcdc.run("allgather", 8, 2, 3)
    assert report["schema"] == "1"
    assert report["ok"] is True
    assert report["oracle"]["met"] is True
    rows = list(csv.DictReader(io.StringIO(report["ledger_csv"])))
    assert len(rows) == report["transmissions"] == 8


def test_topology_helpers():
    assert ringcdc.ring_distance(1, 8, 8) == 1
    assert ringcdc.neighbors(4, 8, 2) == [2, 3, 5, 6]
    assert ringcdc.cyclic_placement(4, 2) == [[1, 2], [2, 3], [3, 4], [1, 4]]
    assert all(len(files) == 4 for files in ringcdc.appendix_c_placement(8, 4))


def test_formulas():
    assert ringcdc.allgather_ncl_formula(8, 2, 3) == "1"
    assert ringcdc.allgather_lower_bound(9, 2, 2) == "7/4"
    assert ringcdc.memory_sharing_envelope(8, 3, "3/2") == "3/2"
    assert ringcdc.coding_gain("alltoall", 8, 3, 1) == "2"
    assert ringcdc.coding_gain("allgather", 8, 8, 1) is None
    assert ringcdc.bounds("alltoall", 8, 3, 1)["achievable"]["exact"] == "11/2"


def test_sweep_is_deterministic():
    a = ringcdc.sweep("alltoall", [8, 9], [1, 2], threads=1)
    b = ringcdc.sweep("alltoall", [8, 9], [1, 2], threads=4)
    assert a == b
    rows = list(csv.DictReader(io.StringIO(a)))
    assert all(row["complete"] == "true" for row in rows)


def test_goldens_match():
    assert all(match for _, match in ringcdc.check_goldens())


def test_bad_parameters_raise():
    with pytest.raises(ValueError):
        ringcdc.run("allgather", 8, 9, 1)
    with pytest.raises(ValueError):
        ringcdc.run("broadcast", 8, 2, 1)
