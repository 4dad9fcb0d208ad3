# Copyright 2026 The softeq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import softeq

SAMPLE = """\
var A interval 1 3
var B interval 2 4
var C interval 3 5
var D set 7
"""


def test_evaluate_counts_every_cost():
    costs = softeq.evaluate([1, 1, 1, 1, 2, 2, 3])
    assert costs == {
        "equalities": 7,
        "disequalities": 14,
        "alldiff_var": 4,
        "allequal_var": 3,
        "nvalues": 3,
    }


def test_instance_round_trip():
    inst = softeq.Instance.parse(SAMPLE)
    assert inst.num_variables == 4
    assert inst.names == ["A", "B", "C", "D"]
    assert inst.domain(3) == [7]
    assert softeq.Instance.parse(inst.format()).format() == inst.format()


@pytest.mark.parametrize("method", ["dp", "brute", "fpt"])
def test_solvers_agree(method):
    inst = softeq.Instance.parse(SAMPLE)
    value, witness = softeq.solve(inst, method)
    assert value == 3
    assert witness["A"] == witness["B"] == witness["C"] == 3


def test_greedy_is_within_half():
    inst = softeq.Instance.parse(SAMPLE)
    result = softeq.greedy(inst)
    assert 2 * result["lower_bound"] >= 3
    assert result["operations"] > 0


def test_tight_greedy_order():
    inst = softeq.Instance.parse("var X1 set 1\nvar X2 set 2\nvar X3 set 1 3\nvar X4 set 2 3\n")
    assert softeq.greedy(inst, "list", [3])["lower_bound"] == 1
    assert softeq.solve(inst, "brute")[0] == 2


def test_propagators():
    inst = softeq.Instance.parse(SAMPLE)
    assert softeq.propagate_var_min(inst, lo=1, mode="rc") == {}
    assert softeq.propagate_var_min(inst, lo=3, mode="rc") == {"A": "3", "B": "3", "C": "3"}
    assert softeq.propagate_var_min(inst, lo=4) is None
    assert softeq.filter_graph_min(inst, max_diseq=2) is None
    assert softeq.filter_graph_min(inst, max_diseq=6) == {}


def test_occurrences_and_crests():
    inst = softeq.Instance.parse("var A interval 1 3\nvar B interval 2 4\n")
    assert (2, 2, 3) in softeq.occurrences(inst)
    assert softeq.crests(inst) == [(1, 4)]


def test_similar_and_generate_are_deterministic():
    text = softeq.generate("multi", seed=7, n=3, lambda_=4)
    assert text == softeq.generate("multi", seed=7, n=3, lambda_=4)
    first = softeq.similar(text)
    assert first == softeq.similar(text)
    if first is not None:
        assert first["objective"][0] >= sum(lo for lo, _ in first["columns"])


def test_hamming():
    assert softeq.hamming([1, 2, 3], [1, 3, 2]) == 2


def test_errors_map_to_exceptions():
    with pytest.raises(softeq.ParseError):
        softeq.Instance.parse("var A bogus 1\n")
    inst = softeq.Instance.parse("var A set 1 3\nvar B interval 1 2\n")
    with pytest.raises(softeq.PreconditionError):
        softeq.solve(inst, "dp")
    with pytest.raises(softeq.Error):
        softeq.solve(softeq.Instance.parse(softeq.generate("set", n=4, lambda_=12)), "fpt", budget=2)
    with pytest.raises(ValueError):
        softeq.solve(inst, "simplex")
