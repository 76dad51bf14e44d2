"""Linear forms on the gap and block bialgebras.

A :class:`LinearForm` is a lazily evaluated, memoized functional tagged with
the algebra it lives on (``gap-nc``, ``gap-sp``, ``block-nc``, ``block-sp``)
and a truncation degree.  Characters and infinitesimal characters are given
by their values on single partitions; everything else is a *generic* form
given by an evaluator on whole monomials.

Values are exact: :class:`fractions.Fraction` by default, though any
commutative ring type with ``+``, ``*`` works (the symbolic tables pass
polynomials through the same code).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import bialgebra_block as bb
from . import bialgebra_gap as bg
from .comodule import rho
from .errors import AlgebraMismatch, NotInvertible, TruncationExceeded, UnsupportedForCrossing
from .partitions import (
    I,
    Partition,
    cat,
    cmonomial,
    enumerate_coarsenings,
    fibre,
    heap_order_count,
    irreducible_components,
    is_boolean,
    is_irreducible,
    is_noncrossing,
    ordinal_sum,
    restrict,
)

ALGEBRAS = ("gap-nc", "gap-sp", "block-nc", "block-sp")
KINDS = ("character", "infinitesimal", "generic")


def _coerce(v):
    return Fraction(v) if isinstance(v, int) else v


class LinearForm:
    """A linear functional on one of the four bialgebras.

    Exactly one of ``generator`` (for characters and infinitesimal
    characters, a function of a single partition) or ``evaluator`` (for
    generic forms, a function of a canonical monomial) is used.
    """

    def __init__(self, kind: str, algebra: str, max_degree: int, generator: Callable | None = None,
                 evaluator: Callable | None = None, name: str = ""):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        if algebra not in ALGEBRAS:
            raise ValueError(f"unknown algebra {algebra!r}")
        if (kind == "generic") != (evaluator is not None) or (kind != "generic") != (generator is not None):
            raise ValueError("characters need a generator, generic forms an evaluator")
        self.kind = kind
        self.algebra = algebra
        self.max_degree = max_degree
        self.name = name
        self._generator = generator
        self._evaluator = evaluator
        self._gen_memo: dict = {}
        self._mono_memo: dict = {}
        self._lock = threading.Lock()

    @property
    def side(self) -> str:
        return self.algebra.split("-")[0]

    @property
    def noncrossing(self) -> bool:
        return self.algebra.endswith("nc")

    def __repr__(self) -> str:
        return f"LinearForm({self.name or '?'}, {self.kind}, {self.algebra}, N={self.max_degree})"

    def canonical(self, x) -> tuple:
        """Turn a partition or a sequence of partitions into this algebra's basis key."""
        M = (x,) if isinstance(x, Partition) else tuple(x)
        if self.side == "block":
            return cmonomial(M)
        return bg.reduce_monomial(M)

    def _check(self, M: tuple) -> None:
        deg = sum(P.n for P in M)
        if deg > self.max_degree:
            raise TruncationExceeded(f"{self!r} evaluated in degree {deg}")
        if self.noncrossing:
            for P in M:
                if not is_noncrossing(P):
                    raise UnsupportedForCrossing(f"{P} is not a basis element of {self.algebra}")

    def generator_value(self, P: Partition):
        if self.kind == "generic":
            return self((P,))
        try:
            return self._gen_memo[P]
        except KeyError:
            pass
        self._check((P,))
        v = _coerce(self._generator(P))
        with self._lock:
            self._gen_memo.setdefault(P, v)
        return v

    def __call__(self, x):
        M = self.canonical(x)
        self._check(M)
        if self.kind == "character":
            v = Fraction(1)
            for P in M:
                v = v * self.generator_value(P)
            return v
        if self.kind == "infinitesimal":
            return self.generator_value(M[0]) if len(M) == 1 else Fraction(0)
        try:
            return self._mono_memo[M]
        except KeyError:
            pass
        v = _coerce(self._evaluator(M))
        with self._lock:
            self._mono_memo.setdefault(M, v)
        return v

    def retag(self, algebra: str) -> "LinearForm":
        """Same generator values on another algebra (the bar/hat identification)."""
        if self.kind == "generic":
            raise AlgebraMismatch("only characters and infinitesimal characters can be retagged")
        return LinearForm(self.kind, algebra, self.max_degree, generator=self.generator_value, name=self.name)


def _mode(noncrossing: bool) -> str:
    return "nc" if noncrossing else "sp"


def to_block(f: LinearForm) -> LinearForm:
    return f.retag("block-" + _mode(f.noncrossing))


def to_gap(f: LinearForm) -> LinearForm:
    return f.retag("gap-" + _mode(f.noncrossing))


def character(rule: Callable, algebra: str, max_degree: int, name: str = "") -> LinearForm:
    return LinearForm("character", algebra, max_degree, generator=rule, name=name)


def infinitesimal(rule: Callable, algebra: str, max_degree: int, name: str = "") -> LinearForm:
    return LinearForm("infinitesimal", algebra, max_degree, generator=rule, name=name)


def generic(evaluator: Callable, algebra: str, max_degree: int, name: str = "") -> LinearForm:
    return LinearForm("generic", algebra, max_degree, evaluator=evaluator, name=name)


def counit_form(algebra: str, max_degree: int) -> LinearForm:
    """``ε``: the counit of the gap or the block bialgebra, as a character."""
    if algebra.startswith("block"):
        return character(lambda P: int(P.k == 1), algebra, max_degree, "epsilon")
    return character(lambda P: 0, algebra, max_degree, "epsilon")


def _require(f: LinearForm, side: str) -> None:
    if f.side != side:
        raise AlgebraMismatch(f"{f!r} is not a form on the {side} bialgebra")


def _same_mode(a: LinearForm, b: LinearForm) -> None:
    if a.noncrossing != b.noncrossing:
        raise AlgebraMismatch(f"{a!r} and {b!r} live over different generator sets")


# ---------------------------------------------------------------- block side

def zeta(noncrossing: bool = True, max_degree: int = 8) -> LinearForm:
    return character(lambda P: 1, "block-" + _mode(noncrossing), max_degree, "zeta")


def moebius(noncrossing: bool = True, max_degree: int = 8) -> LinearForm:
    """``μ(I_n) = 1`` and ``μ(P) = -Σ_{Q > P} μ(Q)``."""

    @lru_cache(maxsize=None)
    def mu(P: Partition) -> int:
        if P.k == 1:
            return 1
        return -sum(mu(Q) for Q in enumerate_coarsenings(P, noncrossing) if Q != P)

    return character(mu, "block-" + _mode(noncrossing), max_degree, "moebius")


def convolve_block(phi: LinearForm, psi: LinearForm) -> LinearForm:
    """``(φ*ψ)(P) = Σ_{Q >= P} φ(Q) ψ(P/Q)``."""
    _require(phi, "block")
    _require(psi, "block")
    _same_mode(phi, psi)
    nc = phi.noncrossing
    N = min(phi.max_degree, psi.max_degree)

    def on(M):
        total = Fraction(0)
        for (left, right), c in bb.delta_block(M, nc).items():
            total = total + c * phi(left) * psi(right)
        return total

    if phi.kind == psi.kind == "character":
        return character(lambda P: on((P,)), phi.algebra, N, f"({phi.name}*{psi.name})")
    return generic(on, phi.algebra, N, f"({phi.name}*{psi.name})")


def convolution_inverse(phi: LinearForm) -> LinearForm:
    """Two-sided inverse of a block character, which exists iff ``φ(I_n) != 0`` for all ``n``."""
    _require(phi, "block")
    if phi.kind != "character":
        raise AlgebraMismatch("convolution inverses are computed for characters")
    for n in range(1, phi.max_degree + 1):
        if phi(I(n)) == 0:
            raise NotInvertible(f"{phi.name}(I_{n}) = 0")
    nc = phi.noncrossing
    inv: LinearForm

    def rule(P: Partition):
        full = I(P.n)
        total = bb.counit_block(P)
        for Q in enumerate_coarsenings(P, nc):
            if Q != full:
                total = total - phi(Q) * inv(fibre(P, Q))
        return total / phi(full)

    inv = character(rule, phi.algebra, phi.max_degree, f"{phi.name}^-1")
    return inv


# ---------------------------------------------------------------- gap side

def e_form(noncrossing: bool = True, max_degree: int = 8) -> LinearForm:
    """The infinitesimal character equal to 1 on one-block partitions and 0 elsewhere."""
    return infinitesimal(lambda P: int(P.k == 1), "gap-" + _mode(noncrossing), max_degree, "e")


def theta(kappa: LinearForm) -> LinearForm:
    """``Θ``: the character with the same values as ``κ`` on single partitions."""
    if kappa.kind != "infinitesimal":
        raise AlgebraMismatch("theta takes an infinitesimal character")
    return character(kappa.generator_value, kappa.algebra, kappa.max_degree, f"Theta({kappa.name})")


def theta_inv(phi: LinearForm) -> LinearForm:
    if phi.kind != "character":
        raise AlgebraMismatch("theta_inv takes a character")
    return infinitesimal(phi.generator_value, phi.algebra, phi.max_degree, f"Theta^-1({phi.name})")


def coaction_act(alpha: LinearForm, phi: LinearForm) -> LinearForm:
    """``α ↶ φ := (α ⊗ φ)∘ρ``."""
    _require(alpha, "gap")
    _require(phi, "block")
    _same_mode(alpha, phi)
    nc = alpha.noncrossing

    def on(M):
        total = Fraction(0)
        for (word, fib), c in rho(M, nc).items():
            total = total + c * alpha(word) * phi(fib)
        return total

    return generic(on, alpha.algebra, min(alpha.max_degree, phi.max_degree), f"({alpha.name}<-{phi.name})")


def _pairing(alpha: LinearForm, beta: LinearForm, coproduct: Callable, unit_value: Callable, name: str) -> LinearForm:
    _require(alpha, "gap")
    _require(beta, "gap")
    _same_mode(alpha, beta)

    def on(M):
        if not M:
            return unit_value()
        total = Fraction(0)
        for (left, right), c in coproduct(M).items():
            a = alpha(left)
            if a:
                total = total + c * a * beta(right)
        return total

    return generic(on, alpha.algebra, min(alpha.max_degree, beta.max_degree), name)


def star(alpha: LinearForm, beta: LinearForm) -> LinearForm:
    """Convolution dual to ``Δ``."""
    return _pairing(alpha, beta, bg.delta, lambda: alpha(()) * beta(()), f"({alpha.name}⋆{beta.name})")


def prec(alpha: LinearForm, beta: LinearForm) -> LinearForm:
    """Half-shuffle dual to ``Δ≺``; vanishes on the unit."""
    return _pairing(alpha, beta, bg.delta_prec, lambda: Fraction(0), f"({alpha.name}≺{beta.name})")


def succ(alpha: LinearForm, beta: LinearForm) -> LinearForm:
    """Half-shuffle dual to ``Δ≻``; vanishes on the unit."""
    return _pairing(alpha, beta, bg.delta_succ, lambda: Fraction(0), f"({alpha.name}≻{beta.name})")


def half_shuffle_products(alpha: LinearForm, beta: LinearForm) -> dict[str, LinearForm]:
    return {"star": star(alpha, beta), "prec": prec(alpha, beta), "succ": succ(alpha, beta)}


def solve_fixpoint_prec(kappa: LinearForm, N: int | None = None) -> LinearForm:
    """``E≺(κ)``: the unique ``φ`` with ``φ = ε + κ ≺ φ``, solved degree by degree."""
    _require(kappa, "gap")
    N = kappa.max_degree if N is None else min(N, kappa.max_degree)
    phi: LinearForm

    def on(M):
        if not M:
            return Fraction(1)
        total = Fraction(0)
        for (left, right), c in bg.delta_prec(M).items():
            k = kappa(left)
            if k:
                total = total + c * k * phi(right)
        return total

    phi = generic(on, kappa.algebra, N, f"E<({kappa.name})")
    return phi


def solve_fixpoint_succ(kappa: LinearForm, N: int | None = None) -> LinearForm:
    """``E≻(κ)``: the unique ``φ`` with ``φ = ε + φ ≻ κ``."""
    _require(kappa, "gap")
    N = kappa.max_degree if N is None else min(N, kappa.max_degree)
    phi: LinearForm

    def on(M):
        if not M:
            return Fraction(1)
        total = Fraction(0)
        for (left, right), c in bg.delta_succ(M).items():
            k = kappa(right)
            if k:
                total = total + c * phi(left) * k
        return total

    phi = generic(on, kappa.algebra, N, f"E>({kappa.name})")
    return phi


def exp_star(kappa: LinearForm, N: int | None = None) -> LinearForm:
    """``Σ_l κ^{⋆l}/l!``, summed exactly up to ``l`` = number of blocks of the argument.

    ``κ`` must vanish on the unit, so every factor of ``κ^{⋆l}`` eats at least one block.
    """
    _require(kappa, "gap")
    N = kappa.max_degree if N is None else min(N, kappa.max_degree)
    powers = [counit_form(kappa.algebra, N)]

    def power(l: int) -> LinearForm:
        while len(powers) <= l:
            powers.append(star(kappa, powers[-1]))
        return powers[l]

    def on(M):
        blocks = sum(P.k for P in M)
        total = Fraction(0)
        for l in range(blocks + 1):
            total = total + power(l)(M) / math.factorial(l)
        return total

    return generic(on, kappa.algebra, N, f"exp({kappa.name})")


def psi_prec(max_degree: int = 8) -> LinearForm:
    """All-ones character on noncrossing partitions."""
    return character(lambda P: 1, "gap-nc", max_degree, "psi<")


def psi_succ(max_degree: int = 8) -> LinearForm:
    """Indicator of boolean (interval) partitions."""
    return character(lambda P: int(is_boolean(P)), "gap-nc", max_degree, "psi>")


def psi_star(max_degree: int = 8) -> LinearForm:
    """``ho(P)/k!``."""
    return character(lambda P: Fraction(heap_order_count(P), math.factorial(P.k)), "gap-nc", max_degree, "psi*")


@lru_cache(maxsize=None)
def _psi_prec_inv(P: Partition) -> int:
    comps = irreducible_components(P)
    k = len(comps)
    value = (-1) ** (k + 1) * cat(k)
    for E in comps:
        base = E.blocks[0]
        for lo, hi in zip(base, base[1:]):
            inner = restrict(E, range(lo + 1, hi)) if hi > lo + 1 else None
            if inner is not None:
                value *= _psi_prec_inv(ordinal_sum(I(1), inner))
    return value


def psi_prec_inverse_closed(P: Partition) -> int:
    """``ψ≺^{*-1}(P)`` from the irreducible-component recursion.

    With ``k`` irreducible components this is ``(-1)^{k+1} cat_k`` (``cat_k`` = ``catalan(k-1)``) times the
    value at ``I_1 ⊎ X`` for every nonempty piece ``X`` sitting in an interior
    gap of a component's outer block.
    """
    if not is_noncrossing(P):
        raise UnsupportedForCrossing(f"{P} is crossing")
    if P.n == 0:
        return 1
    return _psi_prec_inv(P)


def mixed_inverse_products(max_degree: int = 6) -> dict[str, LinearForm]:
    """``ψ≻^{*-1}``, ``ψ≻^{*-1} * ψ≺`` and ``ψ≺^{*-1} * ψ≻`` as block characters."""
    pp = to_block(psi_prec(max_degree))
    ps = to_block(psi_succ(max_degree))
    ps_inv = convolution_inverse(ps)
    pp_inv = convolution_inverse(pp)
    return {
        "succ_inverse": ps_inv,
        "succ_inverse_prec": convolve_block(ps_inv, pp),
        "prec_inverse_succ": convolve_block(pp_inv, ps),
    }


def signed_boolean_indicator(P: Partition) -> int:
    return (-1) ** (P.k + 1) if is_boolean(P) else 0


def irreducible_indicator(P: Partition) -> int:
    return int(is_irreducible(P))


def catalan_identity_terms(n: int) -> list[int]:
    return [(-1) ** (n - k + 1) * cat(n - k) * math.comb(n - k, k) for k in range(n // 2 + 1)]


def catalan_identity_check(n_max: int) -> bool:
    """``Σ_k (-1)^{n-k+1} cat_{n-k} C(n-k,k) = δ_{n,1}`` for ``1 <= n <= n_max``."""
    return all(sum(catalan_identity_terms(n)) == int(n == 1) for n in range(1, n_max + 1))
