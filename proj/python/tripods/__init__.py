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

"""Certified tripod packings and hitting sets in migration digraphs."""

import json

from tripods._tripods import (
    BoundShortfallError,
    CapExceededError,
    Instance,
    ParseError,
    PreconditionError,
    SoundnessError,
    brute_packing_number,
    find_tripod,
    run_cli,
    to_dot,
    tripod_exists,
    verify,
)
from tripods import _tripods

__all__ = [
    "BoundShortfallError",
    "CapExceededError",
    "Instance",
    "ParseError",
    "PreconditionError",
    "SoundnessError",
    "bounds",
    "brute_packing_number",
    "certify",
    "find_tripod",
    "run_cli",
    "to_dot",
    "tripod_exists",
    "verify",
]


def certify(instance, k, route="ramsey", g5="t", edges=False, cap=12):
    """Certificate document as a dict; the JSON text is under "json"."""
    text = _tripods.certify(instance, k, route=route, g5=g5, edges=edges, cap=cap)
    doc = json.loads(text)
    doc["json"] = text
    return doc


def bounds(k, g5="t", route="ramsey"):
    """Bound table entries for k as Python integers."""
    return {name: int(value) for name, value in _tripods.bounds(k, g5, route).items()}
