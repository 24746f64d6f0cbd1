# Copyright 2026 The conncover Authors.
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

import json

import pytest

import conncover as cc


@pytest.fixture
def small():
    return cc.generate(10, 12, rc=1.0, rs=1.0, extent=2.5, seed=3)


def test_instance_round_trip(small, tmp_path):
    path = tmp_path / "inst.json"
    small.save(str(path))
    assert cc.Instance.load(str(path)) == small
    assert cc.Instance.from_json(small.to_json()) == small


def test_instance_rejects_bad_radius():
    with pytest.raises(ValueError):
        cc.Instance([(0.0, 0.0)], [], rc=0.0, rs=1.0)


def test_min_csc_solution_is_verified_and_bounded_by_oracle(small):
    result = cc.solve_min_csc(small)
    exact = cc.exact_min_csc(small)
    assert result["feasible"] == exact["feasible"]
    if exact["feasible"]:
        assert cc.verify_min_csc(small, result["sensors"])
        assert len(result["sensors"]) >= exact["value"]
        assert cc.verify_min_csc(small, exact["witness"])
    report = json.loads(result["report"])
    assert report["feasible"] == result["feasible"]


def test_budgeted_solution_respects_budget(small):
    for qst in ("exact", "heuristic", "auto"):
        result = cc.solve_budgeted(small, 3, qst=qst)
        assert len(result["sensors"]) <= 3
        assert cc.verify_budgeted(small, result["sensors"], 3, result["tree_edges"])
        assert result["profit"] <= cc.exact_budgeted(small, 3)["value"]


def test_unknown_qst_mode(small):
    with pytest.raises(ValueError):
        cc.solve_budgeted(small, 2, qst="fast")


def test_oracle_guard():
    big = cc.generate(30, 5, seed=1)
    with pytest.raises(cc.GuardExceeded):
        cc.exact_min_csc(big)


def test_comm_graph_matches_predicate(small):
    edges = set(cc.comm_edges(small))
    n = len(small)
    for u in range(n):
        for v in range(u + 1, n):
            assert ((u, v) in edges) == small.communicates(u, v)
