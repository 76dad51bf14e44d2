"""The coloured block-substitution operad on compositions.

Colours are positive integers.  A composition with blocks of sizes
``n_1, ..., n_k`` (in numbering order) and degree ``n`` is an operation
``(n_1, ..., n_k) -> n``.  Composing refines block ``i`` by the ``i``-th
input, transported along the increasing bijection ``[n_i] -> block``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import ArityMismatch, ColourMismatch, EmptyExcluded
from .partitions import Composition, Partition, leq, restrict, trivial_composition


@dataclass(frozen=True)
class ColouredSignature:
    inputs: tuple[int, ...]
    output: int


def signature(C: Composition) -> ColouredSignature:
    if C.n == 0:
        raise EmptyExcluded("the empty composition is not an operation")
    return ColouredSignature(tuple(len(b) for b in C.ordered_blocks()), C.n)


def identity(n: int) -> Composition:
    """The identity operation of colour ``n``."""
    if n <= 0:
        raise EmptyExcluded("colour 0 is excluded")
    return Composition(Partition(n, (tuple(range(1, n + 1)),)), (1,))


def block_substitute(C: Composition, inputs: Sequence[Composition]) -> Composition:
    """Replace the block numbered ``i`` by ``inputs[i-1]``; output numbering concatenates the inputs' numberings."""
    blocks = C.ordered_blocks()
    if len(inputs) != len(blocks):
        raise ArityMismatch(f"{C} has {len(blocks)} blocks, got {len(inputs)} inputs")
    out = []
    for i, (b, D) in enumerate(zip(blocks, inputs)):
        if D.n != len(b):
            raise ColourMismatch(f"input {i + 1} has degree {D.n}, block {list(b)} has size {len(b)}")
        out.extend(tuple(b[x - 1] for x in blk) for blk in D.ordered_blocks())
    return Composition.from_ordered_blocks(out)


def sigma_action(C: Composition, sigma: Sequence[int]) -> Composition:
    """Renumber: the block numbered ``j`` gets number ``sigma[j-1]``."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, C.k + 1)):
        raise ArityMismatch(f"{sigma} is not a permutation of [{C.k}]")
    return Composition(C.partition, tuple(sigma[j - 1] for j in C.numbering))


def compose_permutations(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``(sigma ∘ tau)(j) = sigma(tau(j))``."""
    return tuple(sigma[t - 1] for t in tau)


def underlying(C: Composition) -> Partition:
    """Forget the numbering."""
    return C.partition


def fibre_factors(P: Partition, Q: Partition) -> list[Partition]:
    """Restrictions of ``P`` to the blocks of ``Q``, in the canonical block order of ``Q``."""
    return [restrict(P, tau) for tau in Q.blocks]


def factor_through(P: Partition, Q: Partition) -> Composition:
    """Rebuild ``P`` by substituting its fibre factors into ``Q``; requires ``P <= Q``."""
    if not leq(P, Q):
        raise ColourMismatch(f"{P} does not refine {Q}")
    return block_substitute(trivial_composition(Q), [trivial_composition(F) for F in fibre_factors(P, Q)])


def _all_numberings(P: Partition) -> list[Composition]:
    return [Composition(P, perm) for perm in itertools.permutations(range(1, P.k + 1))]


def equivariance_holds(C: Composition, sigma: Sequence[int], inputs: Sequence[Composition]) -> bool:
    """``(σ·C) ∘ (X_1..X_k)`` against ``C ∘ (X_σ(1)..X_σ(k))`` with its output groups permuted back."""
    left = block_substitute(sigma_action(C, sigma), inputs)
    Y = [inputs[sigma[j] - 1] for j in range(C.k)]
    right = block_substitute(C, Y)
    groups: list[list] = []
    blocks = right.ordered_blocks()
    pos = 0
    for D in Y:
        groups.append(blocks[pos:pos + D.k])
        pos += D.k
    # group j of ``right`` came from X_{σ(j)}; ``left`` lists groups by the input index s
    inv = {s: j for j, s in enumerate(sigma)}
    expected = [b for s in range(1, C.k + 1) for b in groups[inv[s]]]
    return left.ordered_blocks() == expected


def verify_block_operad(n_max: int = 5, noncrossing_only: bool = True) -> dict:
    """Typed associativity, unit laws, equivariance and group-action laws up to degree ``n_max``."""
    from .partitions import enumerate_noncrossing_partitions, enumerate_set_partitions, is_noncrossing

    parts = enumerate_noncrossing_partitions if noncrossing_only else enumerate_set_partitions
    comps = {n: [C for P in parts(n) for C in _all_numberings(P)] for n in range(1, n_max + 1)}
    counts = {"associativity": 0, "unit": 0, "equivariance": 0, "action": 0, "refinement": 0}
    failures = []
    for n in range(1, n_max + 1):
        for C in comps[n]:
            sizes = [len(b) for b in C.ordered_blocks()]
            counts["unit"] += 1
            if block_substitute(C, [identity(s) for s in sizes]) != C:
                failures.append({"law": "unit", "C": C.to_json()})
            if block_substitute(identity(n), [C]) != C:
                failures.append({"law": "unit-left", "C": C.to_json()})
            perms = list(itertools.permutations(range(1, C.k + 1)))
            for sigma in perms:
                for tau in perms[:6]:
                    counts["action"] += 1
                    if sigma_action(C, compose_permutations(sigma, tau)) != sigma_action(sigma_action(C, tau), sigma):
                        failures.append({"law": "action", "C": C.to_json(), "sigma": sigma, "tau": tau})
            for Ds in itertools.product(*(comps[s] for s in sizes)):
                D = block_substitute(C, Ds)
                counts["refinement"] += 1
                if not leq(D.partition, C.partition) or (noncrossing_only and not is_noncrossing(D.partition)):
                    failures.append({"law": "refinement", "C": C.to_json()})
                for sigma in perms:
                    inv = {s: j for j, s in enumerate(sigma)}
                    X = [Ds[inv[s]] for s in range(1, C.k + 1)]
                    counts["equivariance"] += 1
                    if not equivariance_holds(C, sigma, X):
                        failures.append({"law": "equivariance", "C": C.to_json(), "sigma": sigma})
                # second layer: one input per block of each D_i, trivial numberings keep this finite
                inner_sizes = [[len(b) for b in Di.ordered_blocks()] for Di in Ds]
                pools = [[trivial_composition(P) for P in parts(s)] for row in inner_sizes for s in row]
                for Es in itertools.product(*pools):
                    counts["associativity"] += 1
                    lhs = block_substitute(D, Es)
                    grouped, pos = [], 0
                    for Di in Ds:
                        grouped.append(block_substitute(Di, Es[pos:pos + Di.k]))
                        pos += Di.k
                    if lhs != block_substitute(C, grouped):
                        failures.append({"law": "associativity", "C": C.to_json()})
    return {"suite": "block-operad", "max_degree": n_max, "counts": counts, "failures": failures,
            "passed": not failures}
