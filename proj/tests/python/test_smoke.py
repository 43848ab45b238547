import os

import pytest

import borromean

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_cyclotomic_normalization():
    assert borromean.normalize_cyclotomic("E(9)^3") == borromean.normalize_cyclotomic("E(3)")


def test_simples_of_pq_group():
    simples = borromean.simples("pq:3,7", "pq:1")
    assert len(simples) == 25
    assert sum(s["dimension"] ** 2 for s in simples) == 21 * 21


def test_trivial_group_bundle():
    b = borromean.bundle("cyclic:1", "trivial", "T,S,B")
    assert len(b["simples"]) == 1


def test_match_relabeled_twists():
    a = borromean.pq_bundle(5, 11, 1, "T,S")
    b = borromean.pq_bundle(5, 11, 4, "T,S")
    c = borromean.pq_bundle(5, 11, 2, "T,S")
    assert borromean.match(a, b, "S,T")["found"]
    assert not borromean.match(a, c, "S,T")["found"]


def test_theorem_small():
    r = borromean.verify_theorem(3, 7, "T,B")
    assert r["classes"] == [[0], [1], [2]]


def test_oracle_trace_unit_strand():
    assert borromean.oracle_trace("pq:3,7", "pq:1", "s1 s1", (0, 0, 0)) == "1"


def test_proof_support():
    ok, lines = borromean.proof_support(3, 7)
    assert ok and lines


def test_errors():
    with pytest.raises(borromean.ValidationError):
        borromean.pq_bundle(3, 5, 0)
    with pytest.raises(borromean.UnsupportedCentralizer):
        borromean.simples(os.path.join(DATA, "s3_group.json"))
    with pytest.raises(borromean.ValidationError):
        borromean.match({}, {}, "T")


def test_s3_with_table():
    simples = borromean.simples(os.path.join(DATA, "s3_group.json"), "trivial", [os.path.join(DATA, "s3_chars.json")])
    assert len(simples) == 8
