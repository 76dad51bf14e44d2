"""Incidence bialgebras of the gap-insertion operad.

``B⋄`` is the free algebra on all partitions, the empty one included; its
basis is words of partitions (*Monomial0*).  The Hopf quotient ``H⋄`` sets
the empty partition equal to the unit, so its basis is words of nonempty
partitions (*Monomial*), the unit being ``()``.  Whether the generators are
all set partitions or only the noncrossing ones does not change any formula
here; the noncrossing words simply span a sub-bialgebra.

Tensors are :class:`LinComb` objects keyed by tuples of words.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import NotInAugmentationIdeal, UnsupportedForCrossing
from .lincomb import LinComb, product
from .partitions import (
    Partition,
    enumerate_cuts,
    enumerate_set_partitions,
    gap_monomial,
    is_noncrossing,
    lowerset_partition,
    nc_closure,
    reduced_gap_monomial,
)

Monomial = tuple[Partition, ...]
UNIT: Monomial = ()


def concat_legs(a: tuple, b: tuple) -> tuple:
    """Multiply tensors of words leg by leg."""
    return tuple(x + y for x, y in zip(a, b))


def reduce_monomial(M: Sequence[Partition]) -> Monomial:
    """Image in ``H⋄``: drop empty factors."""
    return tuple(P for P in M if P.n)


def counit_gap(M: Sequence[Partition]) -> Fraction:
    """1 on words made only of units (and empty partitions), 0 otherwise."""
    return Fraction(int(all(P.n == 0 for P in M)))


@lru_cache(maxsize=None)
def _delta0_terms(P: Partition) -> tuple:
    return tuple(((lowerset_partition(P, c),), gap_monomial(P, c)) for c in enumerate_cuts(P))


@lru_cache(maxsize=None)
def _delta_terms(P: Partition) -> tuple:
    # each entry: (left word, right word, block containing 1 is in the lowerset)
    out = []
    for c in enumerate_cuts(P):
        L = lowerset_partition(P, c)
        out.append(((L,) if L.n else (), reduced_gap_monomial(P, c), 0 in c.lowerset))
    return tuple(out)


def _lc(pairs) -> LinComb:
    out = LinComb()
    for key in pairs:
        out.add(key, 1)
    return out


def delta0_partition(P: Partition) -> LinComb:
    return _lc(_delta0_terms(P))


def delta0(M: Sequence[Partition]) -> LinComb:
    """Coproduct of ``B⋄``: sum over cuts of ``<L> ⊗ <<U>>``, extended multiplicatively."""
    return product((delta0_partition(P) for P in M), concat_legs, ((), ()))


def delta_partition(P: Partition) -> LinComb:
    return _lc((l, r) for l, r, _ in _delta_terms(P))


def delta(M: Sequence[Partition]) -> LinComb:
    """Reduced coproduct on ``H⋄``: empty lowersets give the unit, empty gaps are dropped."""
    return product((delta_partition(P) for P in M), concat_legs, ((), ()))


def _half(M: Sequence[Partition], prec: bool) -> LinComb:
    if not M:
        raise NotInAugmentationIdeal("the half coproducts are defined on nonempty words only")
    first = _lc((l, r) for l, r, has1 in _delta_terms(M[0]) if has1 == prec)
    return product([first] + [delta_partition(P) for P in M[1:]], concat_legs, ((), ()))


def delta_prec(M: Sequence[Partition]) -> LinComb:
    """Terms of ``Δ`` whose lowerset contains the block of 1 in the first factor."""
    return _half(M, True)


def delta_succ(M: Sequence[Partition]) -> LinComb:
    """Terms of ``Δ`` whose upperset contains the block of 1 in the first factor."""
    return _half(M, False)


def apply_on_leg(T: LinComb, leg: int, f: Callable[[tuple], LinComb]) -> LinComb:
    """Replace leg ``leg`` of each tensor key by the tensor ``f(leg)``, flattening."""
    out = LinComb()
    for key, c in T.items():
        for sub, c2 in f(key[leg]).items():
            out.add(key[:leg] + sub + key[leg + 1:], c * c2)
    return out


def coassociativity_sides(M: Sequence[Partition], left: Callable, right: Callable | None = None,
                          outer: Callable | None = None) -> tuple[LinComb, LinComb]:
    """``((left ⊗ Id) ∘ outer)(M)`` and ``((Id ⊗ right) ∘ outer)(M)``.

    ``outer`` defaults to ``left``, ``right`` to ``left``; covers coassociativity
    and the codendriform relations.
    """
    outer = outer or left
    right = right or left
    T = outer(M)
    return apply_on_leg(T, 0, left), apply_on_leg(T, 1, right)


@lru_cache(maxsize=None)
def _nc_fibres(n: int) -> dict:
    table: dict = {}
    for P in enumerate_set_partitions(n):
        table.setdefault(nc_closure(P), []).append(P)
    return {k: tuple(v) for k, v in table.items()}


def nc_star_partition(P: Partition) -> LinComb:
    """All set partitions whose noncrossing closure is ``P``."""
    if not is_noncrossing(P):
        raise UnsupportedForCrossing(f"{P} is crossing")
    return _lc(_nc_fibres(P.n).get(P, ()))


def nc_star(M: Sequence[Partition]) -> LinComb:
    """``nc*`` extended multiplicatively to words."""
    parts = [nc_star_partition(P).map_keys(lambda Q: (Q,)) for P in M]
    return product(parts, lambda a, b: a + b, ())


def tensor_map(T: LinComb, *maps: Callable[[tuple], LinComb]) -> LinComb:
    """Apply ``maps[i]`` to leg ``i`` of every key."""
    out = T
    for leg, f in enumerate(maps):
        out = apply_on_leg(out, leg, lambda w, f=f: f(w).map_keys(lambda x: (x,)))
    return out
