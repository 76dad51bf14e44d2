import itertools

import pytest
from hypothesis import given

from cumulant_kit.errors import ArityMismatch, InvalidGap
from cumulant_kit.gap_operad import (
    arity,
    brace,
    check_corolla_relation,
    compose_full,
    compose_partial,
    corolla,
    iterated_partial,
    nc_retract_check,
    nested_form,
    verify_gap_operad,
)
from cumulant_kit.lincomb import LinComb
from cumulant_kit.partitions import EMPTY, I, enumerate_set_partitions, is_noncrossing

from conftest import nc_partitions, pb, set_partitions


def insert_oracle(P, i, Q):
    """Build the composite by laying out labelled points left to right."""
    points = []
    for x in range(1, P.n + 2):
        if x == i:
            points += [("Q", y) for y in range(1, Q.n + 1)]
        if x <= P.n:
            points.append(("P", x))
    pos = {p: idx + 1 for idx, p in enumerate(points)}
    blocks = [[pos[("P", x)] for x in b] for b in P.blocks] + [[pos[("Q", y)] for y in b] for b in Q.blocks]
    return pb(*blocks) if blocks else EMPTY


def test_insertion_pictures():
    assert compose_partial(I(3), 3, I(2)) == pb([1, 2, 5], [3, 4])
    assert compose_partial(I(3), 3, pb([1], [2])) == pb([1, 2, 5], [3], [4])


def test_full_composition_example():
    out = compose_full(I(3), [pb([1], [2, 3]), I(2), pb([1], [2]), I(4)])
    assert out == pb([1], [2, 3], [4, 7, 10], [5, 6], [8], [9], [11, 12, 13, 14])


def test_brace_example():
    got = brace(I(2), [I(1), I(3)])
    expected = LinComb()
    for P in (pb([2, 6], [1], [3, 4, 5]), pb([2, 3], [1], [4, 5, 6]), pb([1, 3], [2], [4, 5, 6])):
        expected.add(P, 1)
    assert got == expected


def test_brace_degenerate():
    assert brace(I(2), []) == LinComb({I(2): 1})
    assert brace(I(1), [I(1)] * 3) == LinComb()
    assert len(list(brace(I(3), [I(1), I(1)]).items())) == 6


@given(set_partitions(4), set_partitions(3))
def test_partial_matches_oracle(P, Q):
    for i in range(1, arity(P) + 1):
        assert compose_partial(P, i, Q) == insert_oracle(P, i, Q)


def test_gap_range():
    with pytest.raises(InvalidGap):
        compose_partial(I(2), 4, I(1))
    with pytest.raises(InvalidGap):
        compose_partial(I(2), 0, I(1))
    with pytest.raises(ArityMismatch):
        compose_full(I(2), [EMPTY])


@pytest.mark.parametrize("m,n", list(itertools.product(range(1, 9), repeat=2)))
def test_corolla_relation(m, n):
    assert check_corolla_relation(m, n)


def test_corolla_is_one_block():
    assert corolla(1) == EMPTY
    assert corolla(4) == I(3)


@given(set_partitions(3), set_partitions(2), set_partitions(2))
def test_associativity_property(P, Q, R):
    for i in range(1, P.n + 2):
        PQ = compose_partial(P, i, Q)
        for j in range(1, PQ.n + 2):
            assert compose_partial(PQ, j, R) == nested_form(P, i, Q, j, R)


@given(nc_partitions(4), nc_partitions(3))
def test_noncrossing_closed(P, Q):
    for i in range(1, P.n + 2):
        assert is_noncrossing(compose_partial(P, i, Q))


@given(set_partitions(4), set_partitions(3))
def test_nc_intertwines(P, Q):
    for i in range(1, P.n + 2):
        assert nc_retract_check(P, i, Q)


def test_full_against_partial_small():
    pool = [Q for d in range(3) for Q in enumerate_set_partitions(d)]
    for P in enumerate_set_partitions(2):
        for inputs in itertools.product(pool, repeat=3):
            assert compose_full(P, inputs) == iterated_partial(P, inputs)


def test_sweep_small_is_clean():
    report = verify_gap_operad(4)
    assert report["passed"] and report["failures"] == []
    assert report["counts"]["associativity"] > 0
    assert verify_gap_operad(4, noncrossing_only=True)["passed"]
