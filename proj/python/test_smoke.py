"""Smoke tests for the _brunnian extension module."""

import json

import pytest

import _brunnian as b

M1 = [[1, 0, 1], [0, 1, 1], [0, 0, 0]]

TRIPLES = {
    (0, 0, 0), (0, 0, 1), (0, -1, 0), (1, 0, 0), (1, 1, 1), (1, 0, 1),
}


def test_compose_decompose_round_trip():
    mat = b.compose_block2([1, -1], [[7]])
    assert mat == [[1, 0, 1], [0, -1, 1], [0, 0, 7]]
    back = b.decompose_block2(mat)
    assert back["n"] == 2
    assert back["E"] == [1, -1]
    assert back["H"] == [[7]]


def test_decompose_rejects_broken_layout():
    with pytest.raises(b.NotBlockFormError):
        b.decompose_block2([[1, 0, 1], [0, 1, 1], [1, 0, 0]])


def test_alexander():
    out = b.alexander(M1)
    assert out["text"] == "2t - 2t^2"
    assert out["coefficients"] == [0, 2, -2]
    assert b.alexander([[1]])["text"] == "1 - t"


def test_alexander_big_entries_stay_exact():
    big = 10**25
    out = b.alexander([[big]])
    assert out["coefficients"] == [big, -big]


def test_check_matrix():
    verdict = b.check_matrix(M1)
    assert verdict["realizable"] is True
    bad = b.compose_block2([1, -1, 1, -1], [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    verdict = b.check_matrix(bad)
    assert verdict["realizable"] is False
    assert verdict["violations"]


def test_enumeration_engines_cross_check():
    assert {tuple(t) for t in b.enumerate_tuples(2)} == {(0,), (1,)}
    for engine in ("sequence", "constraint", "chord"):
        assert {tuple(t) for t in b.enumerate_tuples(3, engine)} == TRIPLES
    seq4 = {tuple(t) for t in b.enumerate_tuples(4)}
    chord4 = {tuple(t) for t in b.enumerate_tuples(4, "chord")}
    assert seq4 == chord4
    assert len(seq4) == 24
    assert seq4 <= {tuple(t) for t in b.enumerate_tuples(4, "constraint")}


def test_expand_chain():
    out = b.expand_chain("(0)_2")
    assert out["set"] == [
        "(0)_3", "(2)_3", "(0, 2)_3", "(0, 1)_3", "(0, 0, 1)_3", "(0, 0, 0)_3",
    ]
    assert out["classes"] == ["(0)_3", "(2)_3", "(0, 1)_3"]
    with pytest.raises(b.ParseError):
        b.expand_chain("(5)_2")
    with pytest.raises(b.InadmissibleChainError):
        b.expand_chain("(0)_2 (2, 2)_3")


def test_g_columns():
    assert b.g_columns("(0)_2 (0, 1)_3") == [[0], [-1, 0]]


def test_construction_plan():
    plan = b.construction_plan(b.compose_block2([1, -1, 1], [[2, 0], [0, 3]]))
    assert [step["twist"] for step in plan["steps"]] == [8, 9]
    assert "step 2: twist 8" in plan["text"]


def test_sublink_vanishing():
    form = {
        "parts": [2, 2],
        "H": [[[0]], [[0]]],
        "P": {"1,2": [[0]], "2,1": [[0]]},
    }
    report = b.sublink_vanishing(json.dumps(form))
    assert len(report) == 2
    assert all(entry["vanishes"] for entry in report)


def test_trace_split():
    assert b.trace_split_test([1, -1]) is True
    assert b.trace_split_test([1, 1]) is False


def test_s_equivalence_helpers():
    big = b.s_equiv_enlarge([[3]], "column", [5])
    assert big == [[3, 5, 0], [0, 0, 1], [0, 0, 0]]
    swapped = b.s_equiv_congruence([[1, 2], [3, 4]], [[0, 1], [1, 0]])
    assert swapped == [[4, 3], [2, 1]]


def test_adjacency_pairs():
    pairs = b.adjacency_pairs("(0)_2")
    assert any(
        set(p["elements"]) == {"(2)_3", "(0, 2)_3"} and p["kind"] == "I-T"
        for p in pairs
    )
