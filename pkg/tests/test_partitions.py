import itertools
import math
import threading

import pytest
from hypothesis import given

from cumulant_kit.errors import InvalidPartition, InvalidSubset, NotComparable, UnsupportedForCrossing
from cumulant_kit.partitions import (
    EMPTY,
    I,
    J,
    Partition,
    cat,
    catalan,
    convex_components,
    enumerate_coarsenings,
    enumerate_cuts,
    enumerate_noncrossing_partitions,
    enumerate_set_partitions,
    fibre,
    gap_monomial,
    heap_order_count,
    irreducible_components,
    is_boolean,
    is_lowerset,
    is_noncrossing,
    is_upperset,
    leq,
    nc_closure,
    nesting_preorder,
    ordinal_sum,
    parse_partition,
    reduced_gap_monomial,
    restrict,
    standardize,
)

from conftest import nc_partitions, pb, set_partitions
from oracles import bell_oracle, crossing_oracle, ho_oracle, relation_oracle


class TestCanonicalForm:
    def test_standardize_examples(self):
        assert standardize([{2, 7}, {5}]) == pb([1, 3], [2])
        assert standardize([]) == EMPTY
        assert standardize([{1, 2, 5}, {3, 4}]) == pb([1, 2, 5], [3, 4])

    def test_standardize_overlap(self):
        with pytest.raises(InvalidPartition):
            standardize([{1, 2}, {2, 3}])

    def test_from_blocks_rejects_gaps(self):
        with pytest.raises(InvalidPartition):
            Partition.from_blocks([[1], [3]])

    @given(set_partitions(6))
    def test_standardize_idempotent(self, P):
        assert standardize(P.blocks) == P
        assert standardize(standardize(P.blocks).blocks) == P

    def test_parse_forms(self):
        assert parse_partition("1,2,5|3,4") == pb([1, 2, 5], [3, 4])
        assert parse_partition('{"n": 5, "blocks": [[3,4],[1,2,5]]}') == pb([1, 2, 5], [3, 4])
        assert parse_partition({"n": 0, "blocks": []}) == EMPTY
        with pytest.raises(InvalidPartition):
            parse_partition("1,x")
        with pytest.raises(InvalidPartition):
            parse_partition("{bad")

    @given(set_partitions(6))
    def test_json_round_trip(self, P):
        assert parse_partition(P.to_json()) == P
        assert parse_partition(P.to_text() or "{}") == P


class TestNoncrossing:
    def test_examples(self):
        assert is_noncrossing(pb([1], [2, 4], [3]))
        assert not is_noncrossing(pb([1, 3], [2, 4]))
        assert is_noncrossing(EMPTY)

    @given(set_partitions(7))
    def test_against_pattern_oracle(self, P):
        assert is_noncrossing(P) == (not crossing_oracle(P))

    def test_closure_examples(self):
        assert nc_closure(pb([1, 3], [2, 4])) == I(4)
        assert nc_closure(pb([1, 3], [2, 5], [4])) == pb([1, 2, 3, 5], [4])

    @given(set_partitions(6))
    def test_closure_is_lattice_minimum(self, P):
        candidates = [Q for Q in enumerate_set_partitions(P.n) if leq(P, Q) and not crossing_oracle(Q)]
        minimum = [Q for Q in candidates if all(leq(Q, R) for R in candidates)]
        assert minimum == [nc_closure(P)]

    @given(set_partitions(6), set_partitions(6))
    def test_closure_monotone_idempotent(self, P, Q):
        assert nc_closure(nc_closure(P)) == nc_closure(P)
        assert nc_closure(P).n == P.n
        if leq(P, Q):
            assert leq(nc_closure(P), nc_closure(Q))


class TestEnumeration:
    @pytest.mark.parametrize("n", range(0, 9))
    def test_bell(self, n):
        parts = enumerate_set_partitions(n)
        assert len(parts) == bell_oracle(n) == len(set(parts))

    @pytest.mark.parametrize("n", range(0, 11))
    def test_catalan(self, n):
        assert len(enumerate_noncrossing_partitions(n)) == math.comb(2 * n, n) // (n + 1)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_nc_is_filter_of_sp(self, n):
        assert enumerate_noncrossing_partitions(n) == [P for P in enumerate_set_partitions(n) if is_noncrossing(P)]

    def test_small_cases(self):
        assert enumerate_set_partitions(0) == [EMPTY]
        assert set(enumerate_noncrossing_partitions(2)) == {I(2), J(2)}
        assert set(enumerate_noncrossing_partitions(3)) == set(enumerate_set_partitions(3))

    def test_deterministic_order(self):
        assert enumerate_set_partitions(4) == sorted(enumerate_set_partitions(4))

    def test_catalan_shift(self):
        assert [cat(n) for n in range(1, 9)] == [1, 1, 2, 5, 14, 42, 132, 429]
        assert catalan(4) == 14


class TestRestrictAndComponents:
    def test_restrict(self):
        P = pb([1, 2, 5], [3, 4])
        assert restrict(P, {2, 3, 4}) == pb([1], [2, 3])
        assert restrict(P, range(1, 6)) == P
        assert restrict(pb([1, 3], [2, 4]), {1, 2, 3}) == pb([1, 3], [2])
        with pytest.raises(InvalidSubset):
            restrict(P, {6})

    @given(nc_partitions(6))
    def test_restrict_keeps_noncrossing(self, P):
        for r in range(P.n + 1):
            for X in itertools.combinations(range(1, P.n + 1), r):
                assert is_noncrossing(restrict(P, X))

    def test_convex_components(self):
        assert convex_components({2, 3, 4}) == [(2, 4)]
        assert convex_components({1, 2, 4, 7, 8}) == [(1, 2), (4, 4), (7, 8)]
        assert convex_components({5}) == [(5, 5)]
        with pytest.raises(InvalidSubset):
            convex_components(set())


class TestPreorderAndCuts:
    def test_preorder_examples(self):
        o = nesting_preorder(pb([1, 3], [2]))
        assert o.step == ((False, True), (False, False))
        o = nesting_preorder(pb([1, 3], [2, 4]))
        assert o.closure == ((False, True), (True, False))
        assert not any(map(any, nesting_preorder(J(2)).closure))

    @given(set_partitions(6))
    def test_closure_matches_oracle(self, P):
        clo = nesting_preorder(P).closure
        assert {(i, j) for i in range(P.k) for j in range(P.k) if clo[i][j]} == relation_oracle(P)

    @given(set_partitions(6))
    def test_antisymmetric_iff_noncrossing(self, P):
        clo = nesting_preorder(P).closure
        mutual = any(clo[i][j] and clo[j][i] for i in range(P.k) for j in range(P.k))
        assert mutual == (not is_noncrossing(P))

    def test_cut_examples(self):
        assert len(enumerate_cuts(J(2))) == 4
        cuts = enumerate_cuts(pb([1, 3], [2]))
        assert [set(c.lowerset) for c in cuts] == [set(), {0}, {0, 1}]

    @given(set_partitions(6))
    def test_cuts_are_all_lowersets(self, P):
        rel = relation_oracle(P)
        expected = []
        for r in range(P.k + 1):
            for S in itertools.combinations(range(P.k), r):
                if all(a in S for (a, b) in rel if b in S):
                    expected.append(frozenset(S))
        assert sorted(map(sorted, expected)) == sorted(sorted(c.lowerset) for c in enumerate_cuts(P))

    @given(set_partitions(6))
    def test_complement_duality(self, P):
        for r in range(P.k + 1):
            for S in itertools.combinations(range(P.k), r):
                comp = set(range(P.k)) - set(S)
                assert is_lowerset(P, S) == is_upperset(P, comp)

    @given(set_partitions(6))
    def test_crossing_blocks_never_separated(self, P):
        for c in enumerate_cuts(P):
            for i, j in itertools.combinations(range(P.k), 2):
                if crossing_oracle(restrict(P, P.blocks[i] + P.blocks[j])):
                    assert (i in c.lowerset) == (j in c.lowerset)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_same_closure_same_cut_count(self, n):
        # cuts of P correspond to cuts of nc(P): each block of nc(P) is a union of blocks of P
        for P in enumerate_set_partitions(n):
            Q = nc_closure(P)
            lifted = set()
            for c in enumerate_cuts(Q):
                elems = {x for i in c.lowerset for x in Q.blocks[i]}
                lifted.add(frozenset(i for i, b in enumerate(P.blocks) if b[0] in elems))
            assert lifted == {c.lowerset for c in enumerate_cuts(P)}


class TestGapMonomials:
    def test_cut_picture(self):
        P = pb([1, 6], [2, 4], [3], [5], [7, 9], [8])
        cut = next(c for c in enumerate_cuts(P) if {P.blocks[i] for i in c.lowerset} == {(1, 6), (5,), (7, 9)})
        assert gap_monomial(P, cut) == (EMPTY, pb([1, 3], [2]), EMPTY, EMPTY, I(1), EMPTY)
        assert reduced_gap_monomial(P, cut) == (pb([1, 3], [2]), I(1))

    @given(set_partitions(6, min_n=1))
    def test_extreme_cuts(self, P):
        cuts = enumerate_cuts(P)
        assert gap_monomial(P, cuts[0]) == (P,)
        assert gap_monomial(P, cuts[-1]) == (EMPTY,) * (P.n + 1)
        assert reduced_gap_monomial(P, cuts[-1]) == ()

    @given(set_partitions(6))
    def test_degrees_add_up(self, P):
        for c in enumerate_cuts(P):
            L = [x for i in c.lowerset for x in P.blocks[i]]
            assert len(gap_monomial(P, c)) == len(L) + 1
            assert sum(U.n for U in gap_monomial(P, c)) + len(L) == P.n


class TestFibresAndCoarsenings:
    def test_picture_example(self):
        P = pb([1], [2, 3], [4], [5], [6], [7, 9], [8])
        Q = pb([1, 6], [2, 3, 4, 5], [7, 8, 9])
        assert fibre(P, Q) == (J(2), pb([1, 3], [2]), pb([1, 2], [3], [4]))

    @given(set_partitions(6, min_n=1))
    def test_trivial_fibres(self, P):
        assert fibre(P, I(P.n)) == (P,)
        assert fibre(P, P) == tuple(sorted(I(len(b)) for b in P.blocks))

    def test_not_comparable(self):
        with pytest.raises(NotComparable):
            fibre(I(2), J(2))

    def test_coarsening_examples(self):
        assert set(enumerate_coarsenings(J(2))) == {J(2), I(2)}
        assert len(enumerate_coarsenings(J(4), True)) == 14
        assert enumerate_coarsenings(I(5)) == [I(5)]

    @given(set_partitions(5))
    def test_coarsenings_oracle(self, P):
        assert set(enumerate_coarsenings(P)) == {Q for Q in enumerate_set_partitions(P.n) if leq(P, Q)}
        assert set(enumerate_coarsenings(P, True)) == {
            Q for Q in enumerate_set_partitions(P.n) if leq(P, Q) and is_noncrossing(Q)}


class TestOrdinalSumAndHeaps:
    def test_ordinal_sum(self):
        assert ordinal_sum(I(2), I(1)) == pb([1, 2], [3])
        assert ordinal_sum(EMPTY, pb([1, 3], [2])) == pb([1, 3], [2])
        assert ordinal_sum(I(1), I(1), I(1)) == J(3)

    @given(nc_partitions(3), nc_partitions(3), nc_partitions(3))
    def test_ordinal_sum_associative(self, A, B, C):
        assert ordinal_sum(ordinal_sum(A, B), C) == ordinal_sum(A, ordinal_sum(B, C))

    def test_components(self):
        assert irreducible_components(pb([1, 2], [3])) == [I(2), I(1)]
        assert irreducible_components(pb([1, 3], [2])) == [pb([1, 3], [2])]
        assert irreducible_components(J(3)) == [I(1)] * 3
        with pytest.raises(UnsupportedForCrossing):
            irreducible_components(pb([1, 3], [2, 4]))

    @given(nc_partitions(7, min_n=1))
    def test_components_rebuild(self, P):
        comps = irreducible_components(P)
        assert ordinal_sum(*comps) == P
        assert all(C.n in C.blocks[0] for C in comps)

    def test_boolean(self):
        assert is_boolean(pb([1, 2], [3]))
        assert not is_boolean(pb([1, 3], [2]))
        assert is_boolean(I(4))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_heap_orderings_against_permutations(self, n):
        for P in enumerate_noncrossing_partitions(n):
            h = heap_order_count(P)
            assert h == ho_oracle(P)
            assert 1 <= h <= math.factorial(P.k)

    def test_heap_examples(self):
        assert heap_order_count(J(5)) == 120
        assert heap_order_count(pb([1, 3], [2])) == 1
        assert heap_order_count(I(4)) == 1
        with pytest.raises(UnsupportedForCrossing):
            heap_order_count(pb([1, 3], [2, 4]))

    def test_heap_count_threads(self):
        parts = enumerate_noncrossing_partitions(7)
        expected = [heap_order_count(P) for P in parts]
        results = []

        def work():
            results.append([heap_order_count(P) for P in parts])

        threads = [threading.Thread(target=work) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == expected for r in results)
