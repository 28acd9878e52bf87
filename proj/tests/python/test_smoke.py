# Copyright 2026 The Authors.
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

import pytest

import tripods


def minimal():
    return tripods.Instance.from_edges(
        ["a", "b", "c", "t"], [("a", "c"), ("b", "c"), ("c", "t")], ["a", "b"], ["t"]
    )


def test_instance_round_trip():
    inst = minimal()
    assert tripods.Instance.parse(inst.to_text()) == inst
    assert inst.sources == ["a", "b"]
    assert inst.edges == [("a", "c"), ("b", "c"), ("c", "t")]


def test_detect_and_certify():
    inst = minimal()
    assert tripods.tripod_exists(inst)
    tripod = tripods.find_tripod(inst)
    assert tripod["c"] == "c" and tripod["tail"] == ["c", "t"]
    packing = tripods.certify(inst, 1)
    assert packing["kind"] == "packing"
    assert tripods.verify(inst, packing["json"]) == (True, "")
    hitting = tripods.certify(inst, 2)
    assert hitting["kind"] == "hitting-set"
    assert len(hitting["hitting_set"]) <= int(hitting["bounds"]["f1"])
    assert tripods.verify(inst, hitting["json"])[0]


def test_generated_grid_packs_two():
    inst = tripods.Instance.generate("crossing-grid m=3 blocks=3")
    doc = tripods.certify(inst, 2)
    assert doc["kind"] == "packing"
    assert tripods.brute_packing_number(minimal()) == 1


def test_bounds():
    b = tripods.bounds(2)
    assert b["f1"] == 16 and b["g4_ramsey"] == 8


def test_errors():
    with pytest.raises(tripods.ParseError):
        tripods.Instance.parse("vertex a\n")
    with pytest.raises(tripods.PreconditionError):
        tripods.Instance.from_edges(["a"], [("a", "b")], [], [])


def test_cli():
    status, out, _ = tripods.run_cli(["bounds", "--k", "2"])
    assert status == 0 and "f1 16" in out
    assert tripods.run_cli(["nosuch"])[0] == 2
