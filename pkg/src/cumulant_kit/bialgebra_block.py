"""Incidence bialgebra of the block-substitution operad.

``B̂`` is the free commutative algebra on nonempty partitions (all of them,
or only the noncrossing ones); a basis element is a sorted tuple of
partitions (*CMonomial*).  The coproduct refines:
``δ(P) = Σ_{Q >= P} Q ⊗ P/Q``.  In noncrossing mode ``Q`` ranges over
noncrossing coarsenings only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NotComparable
from .lincomb import LinComb, product
from .partitions import (
    I,
    Partition,
    cmonomial,
    enumerate_coarsenings,
    fibre,
    is_noncrossing,
    leq,
    restrict,
)

CMonomial = tuple[Partition, ...]


def cmul(a: CMonomial, b: CMonomial) -> CMonomial:
    return tuple(sorted(a + b, key=Partition.sort_key))


def cmul_legs(a: tuple, b: tuple) -> tuple:
    return tuple(cmul(x, y) for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _delta_terms(P: Partition, noncrossing: bool) -> tuple:
    return tuple(((Q,), fibre(P, Q)) for Q in enumerate_coarsenings(P, noncrossing))


def delta_block(M: Partition | Sequence[Partition], noncrossing_mode: bool = True) -> LinComb:
    """``δ`` on a partition or a commutative monomial, keys ``(CMonomial, CMonomial)``."""
    if isinstance(M, Partition):
        M = (M,)
    parts = []
    for P in M:
        lc = LinComb()
        for key in _delta_terms(P, noncrossing_mode):
            lc.add(key, 1)
        parts.append(lc)
    return product(parts, cmul_legs, ((), ()))


def counit_block(M: Partition | Sequence[Partition]) -> Fraction:
    """``ε(P) = 1`` iff ``P`` has a single block; multiplicative."""
    if isinstance(M, Partition):
        M = (M,)
    return Fraction(int(all(P.k == 1 for P in M)))


def apply_on_leg(T: LinComb, leg: int, f) -> LinComb:
    out = LinComb()
    for key, c in T.items():
        for sub, c2 in f(key[leg]).items():
            out.add(key[:leg] + sub + key[leg + 1:], c * c2)
    return out


@dataclass(frozen=True)
class LatticeInterval:
    """``⟦lower, upper⟧`` with ``lower <= upper`` in the refinement order."""

    lower: Partition
    upper: Partition

    def __post_init__(self):
        if not leq(self.lower, self.upper):
            raise NotComparable(f"{self.lower} is not finer than {self.upper}")

    def elements(self, noncrossing_mode: bool = True) -> list[Partition]:
        return [M for M in enumerate_coarsenings(self.lower, noncrossing_mode) if leq(M, self.upper)]


def lattice_coproduct(iv: LatticeInterval, noncrossing_mode: bool = True) -> LinComb:
    """Opposite interval coproduct ``Σ_M ⟦M,Q⟧ ⊗ ⟦P,M⟧``."""
    out = LinComb()
    for M in iv.elements(noncrossing_mode):
        out.add((LatticeInterval(M, iv.upper), LatticeInterval(iv.lower, M)), 1)
    return out


def phi(iv: LatticeInterval) -> CMonomial:
    """The fibre map ``⟦P,Q⟧ ↦ P/Q``."""
    return fibre(iv.lower, iv.upper)


def interval_splitting(iv: LatticeInterval) -> list[LatticeInterval]:
    """``⟦P,Q⟧ ≅ ∏_τ ⟦P|τ, I_|τ|⟧`` over the blocks ``τ`` of ``Q``."""
    return [LatticeInterval(restrict(iv.lower, tau), I(len(tau))) for tau in iv.upper.blocks]


def lattice_moebius(lower: Partition, upper: Partition, noncrossing_mode: bool = True) -> int:
    """``μ(P, Q)`` of the partition lattice by the defining recursion on the interval."""
    iv = LatticeInterval(lower, upper)
    if noncrossing_mode and not (is_noncrossing(lower) and is_noncrossing(upper)):
        raise NotComparable("noncrossing mode needs noncrossing endpoints")
    elems = sorted(iv.elements(noncrossing_mode), key=lambda M: -M.k)
    labels = {M: M.labels() for M in elems}
    heads = {M: [(b[0] - 1, [x - 1 for x in b[1:]]) for b in M.blocks] for M in elems}
    mu: dict[Partition, int] = {}
    for M in elems:
        if M == lower:
            mu[M] = 1
            continue
        lab = labels[M]
        total = 0
        for R, v in mu.items():
            if R.k > M.k and all(lab[x] == lab[h] for h, rest in heads[R] for x in rest):
                total += v
        mu[M] = -total
    return mu[upper]


def single(P: Partition) -> CMonomial:
    return cmonomial([P])
