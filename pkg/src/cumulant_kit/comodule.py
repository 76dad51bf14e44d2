"""The refinement coaction of ``B̂`` on ``B⋄`` and brute-force checks of its compatibilities.

``ρ(P) = Σ_{Q >= P} Q ⊗ P/Q`` with ``ρ(∅) = ∅ ⊗ 1``, extended
multiplicatively; the left leg is a word, the right leg a commutative
monomial.  The ``verify_*`` functions return JSON-ready reports.
"""

from __future__ import annotations

import time
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .bialgebra_block import apply_on_leg as apply_block_leg
from .bialgebra_block import cmul, delta_block, phi, LatticeInterval, lattice_coproduct
from .bialgebra_gap import (
    apply_on_leg,
    delta,
    delta0,
    delta_prec,
    delta_succ,
    nc_star,
    reduce_monomial,
)
from .lincomb import LinComb, product
from .partitions import (
    EMPTY,
    Partition,
    enumerate_coarsenings,
    enumerate_noncrossing_partitions,
    enumerate_set_partitions,
    fibre,
)


@lru_cache(maxsize=None)
def _rho_terms(P: Partition, noncrossing: bool) -> tuple:
    if P.n == 0:
        return (((EMPTY,), ()),)
    return tuple(((Q,), fibre(P, Q)) for Q in enumerate_coarsenings(P, noncrossing))


def _word_cmono(a: tuple, b: tuple) -> tuple:
    return (a[0] + b[0], cmul(a[1], b[1]))


def rho(M: Partition | Sequence[Partition], noncrossing_mode: bool = True) -> LinComb:
    """Coaction on a word (empty factors allowed); keys are ``(word, CMonomial)``."""
    if isinstance(M, Partition):
        M = (M,)
    parts = []
    for P in M:
        lc = LinComb()
        for key in _rho_terms(P, noncrossing_mode):
            lc.add(key, 1)
        parts.append(lc)
    return product(parts, _word_cmono, ((), ()))


def _multiply_last_two(T: LinComb) -> LinComb:
    # (Id ⊗ Id ⊗ m)(Id ⊗ τ ⊗ Id): (a, x, b, y) -> (a, b, x*y)
    out = LinComb()
    for (a, x, b, y), c in T.items():
        out.add((a, b, cmul(x, y)), c)
    return out


def comodule_sides(M: Sequence[Partition], coproduct: Callable, noncrossing_mode: bool) -> tuple[LinComb, LinComb]:
    """Both sides of ``(Δ⊗Id)∘ρ = (Id⊗Id⊗m)(Id⊗τ⊗Id)(ρ⊗ρ)∘Δ`` for a given coproduct on words."""
    r = lambda w: rho(w, noncrossing_mode)
    lhs = apply_on_leg(rho(M, noncrossing_mode), 0, coproduct)
    T = coproduct(M)
    T = apply_on_leg(T, 0, r)
    T = apply_on_leg(T, 2, r)
    return lhs, _multiply_last_two(T)


def _partitions(n: int, mode: str) -> list[Partition]:
    return enumerate_noncrossing_partitions(n) if mode == "nc" else enumerate_set_partitions(n)


def _modes(mode: str) -> list[str]:
    return ["nc", "sp"] if mode == "both" else [mode]


def _report(name: str, n_max: int, checks: list[dict], started: float) -> dict:
    failures = [c for c in checks if not c["passed"]]
    return {
        "suite": name,
        "max_degree": n_max,
        "checked": len(checks),
        "failures": failures,
        "passed": not failures,
        "seconds": round(time.perf_counter() - started, 3),
        "checks": checks,
    }


def _check(identity: str, mode: str, M, lhs: LinComb, rhs: LinComb) -> dict:
    return {
        "identity": identity,
        "mode": mode,
        "input": [P.to_json() for P in M],
        "terms": len(lhs),
        "passed": lhs == rhs,
    }


def verify_comodule_bialgebra(n_max: int = 4, mode: str = "both", inputs: Iterable[Sequence[Partition]] | None = None) -> dict:
    """Check that ``B⋄`` is a comodule bialgebra over ``B̂`` on every partition up to ``n_max``.

    Checked identities: compatibility with ``Δ₀`` (triple tensors), the same
    with the reduced ``Δ`` on ``H⋄``, multiplicativity of ``ρ``, coassociativity
    of the coaction, and the counit laws.
    """
    started = time.perf_counter()
    checks = []
    for m in _modes(mode):
        nc = m == "nc"
        items = list(inputs) if inputs is not None else [(P,) for n in range(n_max + 1) for P in _partitions(n, m)]
        for M in items:
            lhs, rhs = comodule_sides(M, delta0, nc)
            checks.append(_check("delta0-rho", m, M, lhs, rhs))
            H = reduce_monomial(M)
            lhs, rhs = comodule_sides(H, delta, nc)
            checks.append(_check("delta-rho", m, H, lhs, rhs))
            r = rho(M, nc)
            lhs = apply_on_leg(r, 0, lambda w: rho(w, nc))
            rhs = apply_block_leg(r, 1, lambda x: delta_block(x, nc))
            checks.append(_check("rho-coassociative", m, M, lhs, rhs))
            counit = LinComb()
            for (w, x), c in r.items():
                if all(P.k == 1 for P in x):
                    counit.add(w, c)
            checks.append(_check("rho-counit", m, M, counit, LinComb.basis(tuple(M))))
            eps_left = LinComb()
            for (w, x), c in rhs_counit_terms(M, nc).items():
                eps_left.add(x, c)
            checks.append(_check("counit-comodule-map", m, M, eps_left,
                                 LinComb.basis(()) if all(P.n == 0 for P in M) else LinComb()))
        # multiplicativity of ρ on products of two small partitions
        small = [P for n in range(1, min(n_max, 3) + 1) for P in _partitions(n, m)]
        for A in small:
            for B in small:
                if A.n + B.n > n_max + 1:
                    continue
                lhs = rho((A, B), nc)
                rhs = product([rho(A, nc), rho(B, nc)], _word_cmono, ((), ()))
                checks.append(_check("rho-multiplicative", m, (A, B), lhs, rhs))
    return _report("comodule", n_max, checks, started)


def rhs_counit_terms(M, nc: bool) -> LinComb:
    """``(ε_{B⋄} ⊗ Id)∘ρ(M)``: terms of ``ρ`` whose word is a counit-1 word."""
    out = LinComb()
    for (w, x), c in rho(M, nc).items():
        if all(P.n == 0 for P in w):
            out.add((w, x), c)
    return out


def verify_unshuffle_comodule(n_max: int = 4, mode: str = "both", words: bool = True) -> dict:
    """Check ``(Δ≺⊗Id)∘ρ = (Id⊗Id⊗m)(Id⊗τ⊗Id)(ρ⊗ρ)∘Δ≺`` and the ``≻`` version on ``H⋄``.

    Inputs are all single partitions of degree ``1..n_max`` and, when
    ``words`` is set, all two-letter words of total degree ``<= n_max``.
    """
    started = time.perf_counter()
    checks = []
    for m in _modes(mode):
        nc = m == "nc"
        singles = [(P,) for n in range(1, n_max + 1) for P in _partitions(n, m)]
        items = list(singles)
        if words:
            items += [(A[0], B[0]) for A in singles for B in singles if A[0].n + B[0].n <= n_max]
        for M in items:
            for name, cop in (("delta_prec-rho", delta_prec), ("delta_succ-rho", delta_succ)):
                lhs, rhs = comodule_sides(M, cop, nc)
                checks.append(_check(name, m, M, lhs, rhs))
    return _report("unshuffle", n_max, checks, started)


def verify_coalgebra_maps(n_max: int = 4, mode: str = "both") -> dict:
    """Homomorphism squares for ``nc*`` (against ``Δ``, ``Δ≺``, ``Δ≻``) and for the fibre map ``Φ``."""
    started = time.perf_counter()
    checks = []
    ncs = lambda w: nc_star(w)
    for n in range(1, n_max + 1):
        for P in enumerate_noncrossing_partitions(n):
            for name, cop in (("nc_star-delta", delta), ("nc_star-delta_prec", delta_prec), ("nc_star-delta_succ", delta_succ)):
                lhs = LinComb()
                for w, c in nc_star((P,)).items():
                    for key, c2 in cop(w).items():
                        lhs.add(key, c * c2)
                rhs = LinComb()
                for (a, b), c in cop((P,)).items():
                    for a2, ca in ncs(a).items():
                        for b2, cb in ncs(b).items():
                            rhs.add((a2, b2), c * ca * cb)
                checks.append(_check(name, "sp", (P,), lhs, rhs))
    for m in _modes(mode):
        nc = m == "nc"
        for n in range(1, n_max + 1):
            for P in _partitions(n, m):
                for Q in enumerate_coarsenings(P, nc):
                    iv = LatticeInterval(P, Q)
                    lhs = LinComb()
                    for (a, b), c in lattice_coproduct(iv, nc).items():
                        lhs.add((phi(a), phi(b)), c)
                    rhs = delta_block(phi(iv), nc)
                    chk = _check("phi-coalgebra", m, (P, Q), lhs, rhs)
                    checks.append(chk)
    return _report("coalgebra-maps", n_max, checks, started)
