"""The gap-insertion operad.

A partition of degree ``n`` is an operation of arity ``n + 1``: one input
for each gap of ``1 < 2 < ... < n``, the two outer gaps included.  Gap ``i``
sits just before element ``i`` (gap ``n + 1`` is after ``n``).  The empty
partition is the unit.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import ArityMismatch, InvalidGap
from .lincomb import LinComb
from .partitions import EMPTY, I, Partition, nc_closure


def arity(P: Partition) -> int:
    return P.n + 1


def _shift_blocks(P: Partition, f) -> list[tuple[int, ...]]:
    return [tuple(f(x) for x in b) for b in P.blocks]


def _canon(n: int, blocks) -> Partition:
    return Partition(n, tuple(sorted(blocks, key=lambda b: b[0])))


def compose_partial(P: Partition, i: int, Q: Partition) -> Partition:
    """Insert ``Q`` into gap ``i`` of ``P``."""
    if not 1 <= i <= P.n + 1:
        raise InvalidGap(f"gap {i} out of range 1..{P.n + 1}")
    m = Q.n
    outer = _shift_blocks(P, lambda x: x if x < i else x + m)
    inner = _shift_blocks(Q, lambda x: x + i - 1)
    return _canon(P.n + m, outer + inner)


def compose_full(P: Partition, inputs: Sequence[Partition]) -> Partition:
    """Fill every gap of ``P`` at once; ``inputs[j]`` goes into gap ``j + 1``."""
    if len(inputs) != P.n + 1:
        raise ArityMismatch(f"{P} takes {P.n + 1} inputs, got {len(inputs)}")
    # offset[j] = number of points placed before gap j+1's input
    offset = []
    pos = 0
    for j, Q in enumerate(inputs):
        offset.append(pos)
        pos += Q.n + (1 if j < P.n else 0)
    blocks = _shift_blocks(P, lambda x: offset[x - 1] + inputs[x - 1].n + 1)
    for j, Q in enumerate(inputs):
        blocks += _shift_blocks(Q, lambda x, o=offset[j]: x + o)
    return _canon(pos, blocks)


def corolla(m: int) -> Partition:
    """The generator ``p_m``: the one-block partition of arity ``m``."""
    return I(m - 1)


def check_corolla_relation(m: int, n: int) -> bool:
    """``p_m ⋄_m p_n == p_n ⋄_1 p_m``."""
    lhs = compose_partial(corolla(m), m, corolla(n))
    rhs = compose_partial(corolla(n), 1, corolla(m))
    blocks = [b for b in (tuple(range(1, m)), tuple(range(m, m + n - 1))) if b]
    expected = Partition(m + n - 2, tuple(blocks))
    return lhs == rhs == expected


def brace(P: Partition, args: Sequence[Partition]) -> LinComb:
    """``{P; a_1 ... a_k}``: the sum of all ways of placing the ``a_l`` in distinct gaps, in order.

    Every one of the ``n + 1`` gaps is allowed.  With no arguments this is ``P``.
    """
    out = LinComb()
    for gaps in itertools.combinations(range(1, P.n + 2), len(args)):
        inputs = [EMPTY] * (P.n + 1)
        for g, a in zip(gaps, args):
            inputs[g - 1] = a
        out.add(compose_full(P, inputs), 1)
    return out


def nc_retract_check(P: Partition, i: int, Q: Partition) -> bool:
    """``nc`` intertwines partial composition, and so does the inclusion of noncrossing partitions."""
    lhs = nc_closure(compose_partial(P, i, Q))
    rhs = compose_partial(nc_closure(P), i, nc_closure(Q))
    return lhs == rhs


def nested_form(P: Partition, i: int, Q: Partition, j: int, R: Partition) -> Partition:
    """The other bracketing of ``(P ⋄_i Q) ⋄_j R`` given by the associativity axiom."""
    if j < i:
        return compose_partial(compose_partial(P, j, R), i + R.n, Q)
    if j <= i + Q.n:
        return compose_partial(P, i, compose_partial(Q, j - i + 1, R))
    return compose_partial(compose_partial(P, j - Q.n, R), i, Q)


def iterated_partial(P: Partition, inputs: Sequence[Partition]) -> Partition:
    """Full composition rebuilt from partial ones, filling the last gap first."""
    out = P
    for g in range(len(inputs), 0, -1):
        out = compose_partial(out, g, inputs[g - 1])
    return out


def verify_gap_operad(n_max: int = 6, noncrossing_only: bool = False) -> dict:
    """Associativity, unit laws, full-vs-partial agreement and closure of noncrossing partitions."""
    from .partitions import enumerate_noncrossing_partitions, enumerate_set_partitions, is_noncrossing

    parts = enumerate_noncrossing_partitions if noncrossing_only else enumerate_set_partitions
    by_degree = {n: parts(n) for n in range(n_max + 1)}
    counts = {"associativity": 0, "unit": 0, "full-vs-partial": 0, "nc-closed": 0, "nc-retract": 0}
    failures = []
    for a in range(n_max + 1):
        for P in by_degree[a]:
            counts["unit"] += 1
            if compose_partial(EMPTY, 1, P) != P or any(compose_partial(P, i, EMPTY) != P for i in range(1, a + 2)):
                failures.append({"law": "unit", "P": P.to_json()})
            if compose_full(P, [EMPTY] * (a + 1)) != P:
                failures.append({"law": "unit-full", "P": P.to_json()})
            for b in range(n_max - a + 1):
                for Q in by_degree[b]:
                    for i in range(1, a + 2):
                        PQ = compose_partial(P, i, Q)
                        if is_noncrossing(P) and is_noncrossing(Q):
                            counts["nc-closed"] += 1
                            if not is_noncrossing(PQ):
                                failures.append({"law": "nc-closed", "P": P.to_json(), "i": i, "Q": Q.to_json()})
                        counts["nc-retract"] += 1
                        if not nc_retract_check(P, i, Q):
                            failures.append({"law": "nc-retract", "P": P.to_json(), "i": i, "Q": Q.to_json()})
                        for c in range(n_max - a - b + 1):
                            for R in by_degree[c]:
                                for j in range(1, a + b + 2):
                                    counts["associativity"] += 1
                                    if compose_partial(PQ, j, R) != nested_form(P, i, Q, j, R):
                                        failures.append({"law": "associativity", "P": P.to_json(), "i": i,
                                                         "Q": Q.to_json(), "j": j, "R": R.to_json()})
    # full composition against iterated partial composition, small arities
    for a in range(min(n_max, 3) + 1):
        for P in by_degree[a]:
            pool = [Q for d in range(min(2, n_max) + 1) for Q in by_degree[d]]
            for inputs in itertools.product(pool, repeat=a + 1):
                if sum(Q.n for Q in inputs) + a > n_max:
                    continue
                counts["full-vs-partial"] += 1
                if compose_full(P, inputs) != iterated_partial(P, inputs):
                    failures.append({"law": "full-vs-partial", "P": P.to_json(),
                                     "inputs": [Q.to_json() for Q in inputs]})
    return {"suite": "gap-operad", "max_degree": n_max, "counts": counts, "failures": failures,
            "passed": not failures}
