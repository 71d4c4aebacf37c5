import json
from itertools import product
from math import gcd

import pytest

from cablowup import WeightVector, classify_extractions, count_discrepancy_one, parse_germ
from cablowup.classify import enumerate_weights, orbit
from cablowup.errors import InvalidInput


def test_enumerate_bound_two():
    g = parse_germ("xy + z^3 + u^4")
    ws = list(enumerate_weights(g, 2))
    assert len(ws) == 15 and WeightVector(2, 2, 2, 1) in ws
    assert len(set(ws)) == 15


def test_enumerate_bound_one():
    assert list(enumerate_weights(parse_germ("xy + z^3 + u^3"), 1)) == [WeightVector(1, 1, 1, 1)]
    with pytest.raises(InvalidInput):
        list(enumerate_weights(parse_germ("xy + z^2"), 0))


def test_enumerate_symmetric_halves_zu():
    sym = list(enumerate_weights(parse_germ("xy + z^3 + u^3"), 4))
    assert all(w.c <= w.d for w in sym)
    full = [w for w in product(range(1, 5), repeat=4) if gcd(*w) == 1]
    assert len(sym) == sum(1 for w in full if w[2] <= w[3])


def test_asymmetric_germ_enumerates_both_orders():
    ws = set(enumerate_weights(parse_germ("xy + z^3 + u^4"), 3))
    assert WeightVector(1, 1, 1, 2) in ws and WeightVector(1, 1, 2, 1) in ws


def test_orbits():
    assert orbit(parse_germ("xy + z^3 + u^4"), WeightVector(1, 2, 1, 1)) == [
        WeightVector(1, 2, 1, 1), WeightVector(2, 1, 1, 1)]
    assert len(orbit(parse_germ("xy + z^3 + u^3"), WeightVector(1, 2, 1, 3))) == 4


@pytest.mark.parametrize("n", [3, 4, 5])
def test_small_bound_family(n):
    rep = classify_extractions(parse_germ(f"xy + z^{n} + u^{n}"), 7)
    assert [(tuple(w), d) for w, d in rep.accepted] == [((k, n - k, 1, 1), 1) for k in range(1, n)]
    assert rep.discrepancy_one_count == n - 1
    assert len(rep.orbits) == (n // 2)


def test_accepted_sets_grow_with_bound():
    g = parse_germ("xy + z^3 + u^4")
    prev = set()
    for bound in (1, 2, 3, 5):
        cur = {w for w, _ in classify_extractions(g, bound).accepted}
        assert prev <= cur
        prev = cur
    assert prev == {WeightVector(1, 2, 1, 1), WeightVector(2, 1, 1, 1)}


def test_deterministic_and_parallel_merge():
    g = parse_germ("xy + z^3 + u^3")
    a = classify_extractions(g, 6)
    assert a.to_json() == classify_extractions(g, 6).to_json()
    assert a.to_json() == classify_extractions(g, 6, workers=2).to_json()
    total = sum(a.rejected_summary.values()) + len(a.accepted)
    assert total == len(list(enumerate_weights(g, 6)))


def test_filtered_and_outputs():
    rep = classify_extractions(parse_germ("xy + z^2 + u^5"), 4)
    assert {tuple(w) for w, _ in rep.accepted} == {(1, 1, 1, 1), (1, 3, 2, 1), (3, 1, 2, 1)}
    assert [tuple(w) for w, _ in rep.filtered(max_discrepancy=1).accepted] == [(1, 1, 1, 1)]
    assert {d for _, d in rep.filtered(min_discrepancy=2).accepted} == {2}
    data = json.loads(rep.to_json())
    assert data["discrepancy_one_count"] == 1
    assert data["accepted"][0] == {"weights": [1, 1, 1, 1], "discrepancy": 1}
    assert rep.to_tsv().splitlines()[0] == "a\tb\tc\td\tdiscrepancy"


def test_count_discrepancy_one_small():
    assert count_discrepancy_one(parse_germ("xy + z^3 + u^3"), 3) == 2
    with pytest.raises(InvalidInput):
        count_discrepancy_one(parse_germ("xy + z^3 + u^3"), 2)
