"""Set partitions and noncrossing partitions.

A :class:`Partition` of ``[n] = {1, ..., n}`` is stored in canonical form:
every block is an increasing tuple and blocks are ordered by their minimum.
Two partitions are therefore equal exactly when their canonical forms agree,
which is what lets them serve as hashable basis elements.

Monomials are plain tuples of partitions.  A *Monomial* is an ordered word
without empty factors (the unit is ``()``), a *Monomial0* may contain the
empty partition, and a *CMonomial* is a tuple sorted by :meth:`Partition.sort_key`.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    InvalidPartition,
    InvalidSubset,
    NotComparable,
    UnsupportedForCrossing,
)

Block = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """A set partition of ``[n]`` in canonical form.

    The constructor trusts its input; use :meth:`from_blocks` or
    :func:`standardize` for anything that did not come out of this module.
    """

    n: int
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "Partition":
        """Validate ``blocks`` as a partition of ``[n]`` and canonicalize them."""
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))
        if any(len(b) == 0 for b in canon):
            raise InvalidPartition("empty block")
        elements = [x for b in canon for x in b]
        if n is None:
            n = len(elements)
        if sorted(elements) != list(range(1, n + 1)):
            raise InvalidPartition(f"blocks {list(map(list, canon))} do not partition [{n}]")
        return cls(n, canon)

    @property
    def k(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    @property
    def degree(self) -> int:
        return self.n

    def is_empty(self) -> bool:
        return self.n == 0

    def sort_key(self):
        return (self.n, len(self.blocks), self.blocks)

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Partition") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "Partition") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "Partition") -> bool:
        return self.sort_key() >= other.sort_key()

    def labels(self) -> tuple[int, ...]:
        """``labels()[i-1]`` is the index of the block containing ``i``."""
        lab = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for x in b:
                lab[x - 1] = idx
        return tuple(lab)

    def block_of(self, x: int) -> int:
        for idx, b in enumerate(self.blocks):
            if x in b:
                return idx
        raise InvalidSubset(f"{x} not in [{self.n}]")

    def to_text(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def __str__(self) -> str:
        if self.n == 0:
            return "{}"
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


EMPTY = Partition(0, ())


def I(n: int) -> Partition:
    """The one-block partition of ``[n]``."""
    return Partition(n, (tuple(range(1, n + 1)),)) if n else EMPTY


def J(n: int) -> Partition:
    """The partition of ``[n]`` into singletons."""
    return Partition(n, tuple((i,) for i in range(1, n + 1)))


def standardize(raw_blocks: Iterable[Iterable[int]]) -> Partition:
    """Relabel disjoint blocks of positive integers onto ``[n]`` monotonically."""
    blocks = [sorted(set(b)) for b in raw_blocks]
    blocks = [b for b in blocks if b]
    elements = [x for b in blocks for x in b]
    if len(elements) != len(set(elements)):
        raise InvalidPartition("overlapping blocks")
    if any(not isinstance(x, int) or x < 1 for x in elements):
        raise InvalidPartition("elements must be positive integers")
    rank = {x: i + 1 for i, x in enumerate(sorted(elements))}
    canon = sorted((tuple(rank[x] for x in b) for b in blocks), key=lambda b: b[0])
    return Partition(len(elements), tuple(canon))


def _crosses(a: Block, b: Block) -> bool:
    # a and b cross iff the merged label word has at least four alternating runs
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    runs = 1
    for (_, s), (_, t) in zip(merged, merged[1:]):
        if s != t:
            runs += 1
            if runs >= 4:
                return True
    return False


def blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff there are ``x < y < z < w`` with ``x, z`` in ``a`` and ``y, w`` in ``b`` or vice versa."""
    return _crosses(tuple(a), tuple(b))


def is_noncrossing(P: Partition) -> bool:
    return not any(_crosses(a, b) for a, b in itertools.combinations(P.blocks, 2))


def nc_closure(P: Partition) -> Partition:
    """Finest noncrossing partition coarser than ``P``: join crossing blocks until none cross."""
    blocks = [set(b) for b in P.blocks]
    changed = True
    while changed:
        changed = False
        for i, j in itertools.combinations(range(len(blocks)), 2):
            if _crosses(tuple(sorted(blocks[i])), tuple(sorted(blocks[j]))):
                blocks[i] |= blocks.pop(j)
                changed = True
                break
    return Partition.from_blocks(blocks, P.n)


@lru_cache(maxsize=None)
def _set_partitions(n: int) -> tuple[Partition, ...]:
    out = []

    def rgs(i: int, word: list[int], m: int):
        if i == n:
            blocks = [[] for _ in range(m)]
            for pos, lab in enumerate(word):
                blocks[lab].append(pos + 1)
            out.append(Partition(n, tuple(tuple(b) for b in blocks)))
            return
        for lab in range(m + 1):
            word.append(lab)
            rgs(i + 1, word, max(m, lab + 1))
            word.pop()

    rgs(0, [], 0)
    return tuple(sorted(out, key=Partition.sort_key))


def enumerate_set_partitions(n: int) -> list[Partition]:
    """All partitions of ``[n]``, sorted by :meth:`Partition.sort_key`."""
    if n < 0:
        raise InvalidPartition("negative degree")
    return list(_set_partitions(n))


@lru_cache(maxsize=None)
def _nc_on_interval(n: int) -> tuple[tuple[Block, ...], ...]:
    # noncrossing partitions of [n] as raw block lists; the block of 1 is
    # {1 = a_1 < ... < a_r} and each gap between consecutive a's (and after
    # a_r) carries an independent noncrossing partition
    if n == 0:
        return ((),)
    out = []
    rest = list(range(2, n + 1))
    for r in range(len(rest) + 1):
        for tail in itertools.combinations(rest, r):
            head = (1,) + tail
            bounds = list(head) + [n + 1]
            pieces = []
            for lo, hi in zip(bounds, bounds[1:]):
                size = hi - lo - 1
                pieces.append([tuple(tuple(x + lo for x in b) for b in sub) for sub in _nc_on_interval(size)])
            for combo in itertools.product(*pieces):
                out.append((head,) + tuple(b for part in combo for b in part))
    return tuple(out)


@lru_cache(maxsize=None)
def _noncrossing_partitions(n: int) -> tuple[Partition, ...]:
    parts = [Partition(n, tuple(sorted(bl, key=lambda b: b[0]))) for bl in _nc_on_interval(n)]
    return tuple(sorted(parts, key=Partition.sort_key))


def enumerate_noncrossing_partitions(n: int) -> list[Partition]:
    """All noncrossing partitions of ``[n]``, sorted by :meth:`Partition.sort_key`."""
    if n < 0:
        raise InvalidPartition("negative degree")
    return list(_noncrossing_partitions(n))


def restrict(P: Partition, X: Iterable[int]) -> Partition:
    """The standardized partition induced by ``P`` on ``X``."""
    X = set(X)
    if not X <= set(range(1, P.n + 1)):
        raise InvalidSubset(f"{sorted(X)} is not a subset of [{P.n}]")
    return standardize([x for x in b if x in X] for b in P.blocks)


@dataclass(frozen=True)
class NestingPreorder:
    """``step[i][j]`` is the one-step relation ``pi_i -> pi_j`` for ``i != j``; ``closure`` is its transitive closure."""

    step: tuple[tuple[bool, ...], ...]
    closure: tuple[tuple[bool, ...], ...]


def nesting_preorder(P: Partition) -> NestingPreorder:
    """``pi -> rho`` iff the convex hull of ``pi`` meets ``rho``.

    Reflexive pairs are left out of both layers; cuts only use the closure.
    """
    k = P.k
    step = [[False] * k for _ in range(k)]
    for i, a in enumerate(P.blocks):
        lo, hi = a[0], a[-1]
        for j, b in enumerate(P.blocks):
            if i != j and any(lo <= x <= hi for x in b):
                step[i][j] = True
    clo = [row[:] for row in step]
    for m in range(k):
        for i in range(k):
            if clo[i][m]:
                for j in range(k):
                    if clo[m][j] and i != j:
                        clo[i][j] = True
    return NestingPreorder(tuple(map(tuple, step)), tuple(map(tuple, clo)))


@dataclass(frozen=True)
class Cut:
    """A lowerset of block indices of ``partition``; the upperset is its complement."""

    partition: Partition
    lowerset: frozenset[int]

    @property
    def upperset(self) -> frozenset[int]:
        return frozenset(range(self.partition.k)) - self.lowerset


def is_lowerset(P: Partition, S: Iterable[int], order: NestingPreorder | None = None) -> bool:
    """``S`` is closed under predecessors: ``b in S`` and ``s -> b`` imply ``s in S``."""
    S = set(S)
    clo = (order or nesting_preorder(P)).closure
    return all(s in S for b in S for s in range(P.k) if clo[s][b])


def is_upperset(P: Partition, S: Iterable[int], order: NestingPreorder | None = None) -> bool:
    S = set(S)
    clo = (order or nesting_preorder(P)).closure
    return all(s in S for b in S for s in range(P.k) if clo[b][s])


@lru_cache(maxsize=4096)
def _cuts(P: Partition) -> tuple[Cut, ...]:
    order = nesting_preorder(P)
    # preds[b] as a bitmask, so a lowerset test is a couple of integer ops
    preds = [sum(1 << s for s in range(P.k) if order.closure[s][b]) for b in range(P.k)]
    out = []
    for mask in range(1 << P.k):
        if all(preds[b] & ~mask == 0 for b in range(P.k) if mask >> b & 1):
            out.append(Cut(P, frozenset(b for b in range(P.k) if mask >> b & 1)))
    return tuple(out)


def enumerate_cuts(P: Partition) -> list[Cut]:
    """All cuts of ``P``, ordered by the bitmask of their lowerset."""
    return list(_cuts(P))


def convex_components(X: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers in ``X`` as closed intervals ``(a, b)``."""
    xs = sorted(set(X))
    if not xs:
        raise InvalidSubset("convex components of the empty set")
    out = []
    start = prev = xs[0]
    for x in xs[1:]:
        if x != prev + 1:
            out.append((start, prev))
            start = x
        prev = x
    out.append((start, prev))
    return out


def _elements(P: Partition, idx: Iterable[int]) -> list[int]:
    return sorted(x for i in idx for x in P.blocks[i])


def lowerset_partition(P: Partition, cut: Cut) -> Partition:
    """The standardized partition ``<L>`` formed by the lowerset blocks."""
    return standardize(P.blocks[i] for i in sorted(cut.lowerset))


def gap_monomial(P: Partition, cut: Cut) -> tuple[Partition, ...]:
    """The upperset split along the gaps left by the lowerset, empties included.

    If ``x_1 < ... < x_m`` are the lowerset elements the result has ``m + 1``
    factors, the ``i``-th being the upperset restricted to ``(x_i, x_{i+1})``.
    """
    xs = _elements(P, cut.lowerset)
    bounds = [0] + xs + [P.n + 1]
    upper = [P.blocks[i] for i in sorted(cut.upperset)]
    out = []
    for lo, hi in zip(bounds, bounds[1:]):
        out.append(standardize([x for x in b if lo < x < hi] for b in upper))
    return tuple(out)


def reduced_gap_monomial(P: Partition, cut: Cut) -> tuple[Partition, ...]:
    return tuple(U for U in gap_monomial(P, cut) if U.n)


def leq(P: Partition, Q: Partition) -> bool:
    """Refinement order: every block of ``P`` lies inside a block of ``Q``."""
    if P.n != Q.n:
        return False
    lab = Q.labels()
    return all(lab[x - 1] == lab[b[0] - 1] for b in P.blocks for x in b)


def cmonomial(factors: Iterable[Partition]) -> tuple[Partition, ...]:
    """Canonical commutative monomial: empty factors dropped, the rest sorted."""
    return tuple(sorted((f for f in factors if f.n), key=Partition.sort_key))


def fibre(P: Partition, Q: Partition) -> tuple[Partition, ...]:
    """``P/Q``: the commutative monomial of ``P`` restricted to each block of ``Q``."""
    if not leq(P, Q):
        raise NotComparable(f"{P} is not finer than {Q}")
    return cmonomial(restrict(P, tau) for tau in Q.blocks)


@lru_cache(maxsize=8192)
def _coarsenings(P: Partition, noncrossing_only: bool) -> tuple[Partition, ...]:
    out = []
    for grouping in _set_partitions(P.k):
        merged = [sorted(x for i in g for x in P.blocks[i - 1]) for g in grouping.blocks]
        Q = Partition(P.n, tuple(sorted((tuple(b) for b in merged), key=lambda b: b[0])))
        if not noncrossing_only or is_noncrossing(Q):
            out.append(Q)
    return tuple(sorted(out, key=Partition.sort_key))


def enumerate_coarsenings(P: Partition, noncrossing_only: bool = False) -> list[Partition]:
    """All ``Q >= P``, obtained by merging blocks along set partitions of the block set."""
    return list(_coarsenings(P, noncrossing_only))


def ordinal_sum(*parts: Partition) -> Partition:
    """``P ⊎ Q``: ``Q`` shifted past ``P``."""
    blocks: list[Block] = []
    shift = 0
    for P in parts:
        blocks.extend(tuple(x + shift for x in b) for b in P.blocks)
        shift += P.n
    return Partition(shift, tuple(blocks))


def _require_nc(P: Partition) -> None:
    if not is_noncrossing(P):
        raise UnsupportedForCrossing(f"{P} is crossing")


def is_irreducible(P: Partition) -> bool:
    """1 and n share a block (the empty partition is not irreducible)."""
    return P.n > 0 and P.n in P.blocks[0]


def irreducible_components(P: Partition) -> list[Partition]:
    """Split a noncrossing ``P`` into its ordinal-sum factors."""
    _require_nc(P)
    out = []
    start = 1
    while start <= P.n:
        b = next(b for b in P.blocks if b[0] == start)
        end = b[-1]
        out.append(restrict(P, range(start, end + 1)))
        start = end + 1
    return out


def is_boolean(P: Partition) -> bool:
    """Every irreducible component is a single block, i.e. all blocks are intervals."""
    return all(C.k == 1 for C in irreducible_components(P))


@lru_cache(maxsize=None)
def _ho(P: Partition) -> int:
    if P.k <= 1:
        return 1
    clo = nesting_preorder(P).closure
    total = 0
    for i in range(P.k):
        if not any(clo[i]):
            total += _ho(standardize(b for j, b in enumerate(P.blocks) if j != i))
    return total


def heap_order_count(P: Partition) -> int:
    """Number of numberings of the blocks that increase along the nesting order."""
    _require_nc(P)
    if P.n == 0:
        raise InvalidPartition("heap orderings of the empty partition")
    return _ho(P)


def catalan(n: int) -> int:
    """The Catalan number ``C(2n, n)/(n + 1)``, so ``catalan(n) = |NCP(n)|``."""
    return math.comb(2 * n, n) // (n + 1)


def cat(n: int) -> int:
    """Shifted Catalan numbers ``cat_1 = cat_2 = 1, cat_3 = 2, cat_4 = 5``: ``cat(n) = catalan(n - 1)``."""
    return catalan(n - 1)


@dataclass(frozen=True)
class Composition:
    """A partition together with a numbering of its blocks.

    ``numbering[i]`` is the number (in ``1..k``) given to the ``i``-th
    canonical block.
    """

    partition: Partition
    numbering: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.numbering) != list(range(1, self.partition.k + 1)):
            raise ArityMismatch(f"numbering {self.numbering} is not a permutation of [{self.partition.k}]")

    @classmethod
    def from_ordered_blocks(cls, blocks: Sequence[Iterable[int]]) -> "Composition":
        """Build from blocks listed in numbering order, e.g. ``({1,5,6}, {2,3,4}, ...)``."""
        blocks = [tuple(sorted(b)) for b in blocks]
        P = Partition.from_blocks(blocks)
        pos = {b: i + 1 for i, b in enumerate(blocks)}
        return cls(P, tuple(pos[b] for b in P.blocks))

    def ordered_blocks(self) -> list[Block]:
        out: list[Block] = [()] * self.partition.k
        for b, num in zip(self.partition.blocks, self.numbering):
            out[num - 1] = b
        return out

    @property
    def k(self) -> int:
        return self.partition.k

    @property
    def n(self) -> int:
        return self.partition.n

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.ordered_blocks()]}

    def __str__(self) -> str:
        return "(" + ";".join(",".join(map(str, b)) for b in self.ordered_blocks()) + ")"


def trivial_composition(P: Partition) -> Composition:
    return Composition(P, tuple(range(1, P.k + 1)))


def parse_partition(data) -> Partition:
    """Accept a JSON object/string ``{"n":..,"blocks":[..]}`` or the text form ``"1,2,5|3,4"``."""
    if isinstance(data, Partition):
        return data
    if isinstance(data, str):
        s = data.strip()
        if s in ("", "{}", "()"):
            return EMPTY
        if s.startswith("{") or s.startswith("["):
            try:
                obj = json.loads(s)
            except json.JSONDecodeError as exc:
                raise InvalidPartition(f"cannot parse {data!r}") from exc
            return parse_partition(obj)
        try:
            return Partition.from_blocks([int(x) for x in blk.split(",")] for blk in s.split("|"))
        except ValueError as exc:
            raise InvalidPartition(f"cannot parse {data!r}") from exc
    if isinstance(data, dict):
        try:
            return Partition.from_blocks(data["blocks"], data.get("n"))
        except (KeyError, TypeError) as exc:
            raise InvalidPartition(f"malformed partition {data!r}") from exc
    if isinstance(data, list):
        return Partition.from_blocks(data)
    raise InvalidPartition(f"cannot parse {data!r}")


def monomial_to_json(m: Sequence[Partition]) -> list:
    return [P.to_json() for P in m]
