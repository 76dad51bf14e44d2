"""Acceptance criteria, one check per criterion.

Each check returns ``(passed, detail)`` and has a wall-clock budget.  Under
pytest the PASS/FAIL lines are collected and printed in the terminal
summary; ``python tests/test_acceptance.py`` prints them directly.
"""

import math
import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cumulant_kit import characters as ch
from cumulant_kit import moments as mm
from cumulant_kit.bialgebra_block import lattice_moebius
from cumulant_kit.bialgebra_gap import delta, delta0, delta_prec, delta_succ
from cumulant_kit.block_operad import block_substitute, verify_block_operad
from cumulant_kit.comodule import comodule_sides, verify_comodule_bialgebra, verify_unshuffle_comodule
from cumulant_kit.gap_operad import check_corolla_relation, compose_full, compose_partial, verify_gap_operad
from cumulant_kit.partitions import (
    I,
    J,
    Composition,
    cat,
    enumerate_noncrossing_partitions,
    enumerate_set_partitions,
    heap_order_count,
    is_boolean,
    is_irreducible,
    leq,
    nc_closure,
)
from cumulant_kit.polynomial import variables

from conftest import ACCEPTANCE_LINES, pb, random_rationals
from oracles import bell_oracle, crossing_oracle, ho_oracle


def criterion_1():
    k1, k2, k3, k4 = variables(4)
    m = mm.symbolic_table("free", 4)
    ok = (m[1] == k2 + k1 ** 2
          and m[2] == k3 + 3 * k1 * k2 + k1 ** 3
          and m[3] == k4 + 4 * k1 * k3 + 2 * k2 ** 2 + 6 * k1 ** 2 * k2 + k1 ** 4)
    return ok, f"m4 = {m[3].to_string('k')}"


MU_TABLE = [
    (I(1), 1), (I(2), 1), (I(3), 1), (I(4), 1),
    (J(2), -1), (pb([1, 3], [2]), -1), (pb([1], [2, 3]), -1), (pb([1, 2], [3]), -1),
    (pb([1], [2, 3, 4]), -1), (pb([1, 3, 4], [2]), -1), (pb([1, 2, 4], [3]), -1), (pb([1, 2, 3], [4]), -1),
    (J(3), 2), (pb([1, 2], [3], [4]), 2), (pb([1], [2, 3], [4]), 2), (pb([1], [2], [3, 4]), 2),
    (pb([1], [2, 4], [3]), 1), (pb([1, 3], [2], [4]), 1),
    (J(4), -5),
]


def criterion_2():
    recursive = ch.moebius(True, 4)
    inverted = ch.convolution_inverse(ch.zeta(True, 4))
    bad = [str(P) for P, v in MU_TABLE if not recursive((P,)) == inverted((P,)) == v]
    return not bad, f"{len(MU_TABLE)} values" + (f", mismatches {bad}" if bad else "")


def criterion_3():
    inv = ch.convolution_inverse(ch.to_block(ch.psi_prec(8)))
    rows = []
    for n in range(1, 9):
        target = (-1) ** (n + 1) * cat(n)
        rows.append(ch.psi_prec_inverse_closed(J(n)) == inv((J(n),)) == lattice_moebius(J(n), I(n)) == target)
    return all(rows), f"J_8 -> {inv((J(8),))}"


def criterion_4():
    return ch.catalan_identity_check(12), "n = 1..12"


def criterion_5():
    e = ch.e_form(True, 6)
    L, R, X = ch.solve_fixpoint_prec(e), ch.solve_fixpoint_succ(e), ch.exp_star(e)
    parts = [P for n in range(1, 7) for P in enumerate_noncrossing_partitions(n)]
    bad = [P for P in parts
           if L((P,)) != 1 or R((P,)) != int(is_boolean(P))
           or X((P,)) != Fraction(heap_order_count(P), math.factorial(P.k))]
    return len(parts) == 196 and not bad, f"{len(parts)} partitions, {len(bad)} mismatches"


def criterion_6():
    full = verify_comodule_bialgebra(4, "both")
    halves = verify_unshuffle_comodule(4, "both")
    spot = 0
    ok = full["passed"] and halves["passed"]
    for nc, parts in ((True, enumerate_noncrossing_partitions(5)), (False, enumerate_set_partitions(5))):
        for P in parts[::5]:
            for cop in (delta0, delta, delta_prec, delta_succ):
                lhs, rhs = comodule_sides((P,), cop, nc)
                spot += 1
                ok = ok and lhs == rhs
    return ok, f"{full['checked'] + halves['checked']} exhaustive checks, {spot} at degree 5"


def criterion_7():
    gap = verify_gap_operad(6)
    block_nc = verify_block_operad(5, noncrossing_only=True)
    block_sp = verify_block_operad(5, noncrossing_only=False)
    corolla = all(check_corolla_relation(m, n) for m in range(1, 9) for n in range(1, 9))
    ex_gap = (compose_partial(I(3), 3, J(2)) == pb([1, 2, 5], [3], [4])
              and compose_full(I(3), [pb([1], [2, 3]), I(2), J(2), I(4)])
              == pb([1], [2, 3], [4, 7, 10], [5, 6], [8], [9], [11, 12, 13, 14]))
    outer = Composition.from_ordered_blocks([(1, 5, 6), (2, 3, 4), (7, 8, 9, 10, 11)])
    ins = [Composition.from_ordered_blocks(b) for b in ([(1,), (2, 3)], [(1, 3), (2,)], [(1, 2, 5), (3, 4)])]
    ex_block = tuple(block_substitute(outer, ins).ordered_blocks()) == ((1,), (5, 6), (2, 4), (3,), (7, 8, 11), (9, 10))
    ok = gap["passed"] and block_nc["passed"] and block_sp["passed"] and corolla and ex_gap and ex_block
    return ok, f"{gap['counts']['associativity']} gap triples, {block_sp['counts']['associativity']} block triples"


def criterion_8(seeds=100):
    ok = True
    for seed in range(seeds):
        rng = random.Random(seed)
        k = random_rationals(rng, 6)
        free = mm.free_moments_sum(k)
        ok = ok and mm.free_moments_moebius(k) == free and mm.free_moments_fixpoint(k) == free
        c = random_rationals(rng, 6)
        ok = ok and mm.classical_moments(c) == mm.free_moments(mm.free_from_classical(c))
    return ok, f"{seeds} seeds, N = 6"


def criterion_9():
    forms = ch.mixed_inverse_products(6)
    bad = 0
    for n in range(1, 7):
        for P in enumerate_noncrossing_partitions(n):
            sign = (-1) ** (P.k + 1)
            bad += forms["succ_inverse"]((P,)) != (sign if is_boolean(P) else 0)
            bad += forms["succ_inverse_prec"]((P,)) != int(is_irreducible(P))
            bad += forms["prec_inverse_succ"]((P,)) != (sign if is_irreducible(P) else 0)
    return not bad, f"{bad} mismatches"


def criterion_10():
    ok = True
    for n in range(7):
        for P in enumerate_set_partitions(n):
            cands = [Q for Q in enumerate_set_partitions(n) if leq(P, Q) and not crossing_oracle(Q)]
            ok = ok and [Q for Q in cands if all(leq(Q, R) for R in cands)] == [nc_closure(P)]
    for n in range(1, 8):
        for P in enumerate_noncrossing_partitions(n):
            ok = ok and heap_order_count(P) == ho_oracle(P)
    for n in range(9):
        ok = ok and len(enumerate_noncrossing_partitions(n)) == math.comb(2 * n, n) // (n + 1)
        ok = ok and len(enumerate_set_partitions(n)) == bell_oracle(n)
    return ok, "closure n<=6, heaps n<=7, counts n<=8"


CRITERIA = [
    (1, "free moment tables", criterion_1, 1),
    (2, "Möbius table, recursion and zeta inversion", criterion_2, 1),
    (3, "psi_prec inverse on sticks, three routes", criterion_3, 30),
    (4, "Catalan identity", criterion_4, 1),
    (5, "fixpoint closed forms on NCP(<=6)", criterion_5, 10),
    (6, "comodule bialgebra identities", criterion_6, 300),
    (7, "operad axioms and worked examples", criterion_7, 120),
    (8, "cross-paradigm consistency", criterion_8, 30),
    (9, "inverse-character propositions", criterion_9, 30),
    (10, "brute-force oracles", criterion_10, 60),
]


def evaluate(number, title, check, budget):
    started = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failure, reported on the line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - started
    passed = ok and elapsed < budget
    line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {title} ({elapsed:.2f}s / {budget}s) {detail}"
    return passed, line


@pytest.mark.parametrize("number,title,check,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, budget):
    passed, line = evaluate(number, title, check, budget)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
