"""Moment-cumulant relations: free, classical, boolean and monotone.

Sequences are plain lists indexed from 1 in the math and from 0 in Python:
``k[0]`` is ``k_1``.  Moments are computed along independent routes, at
least a direct sum over partitions plus one route through the bialgebras,
and the routes are compared when ``check=True``.  Entries may be any exact
ring elements, e.g. :class:`fractions.Fraction` or
:class:`~cumulant_kit.polynomial.Poly`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from . import characters as ch
from .errors import InternalInconsistency
from .partitions import (
    I,
    J,
    Partition,
    enumerate_noncrossing_partitions,
    enumerate_set_partitions,
    heap_order_count,
    is_boolean,
    nc_closure,
)
from .polynomial import Poly, variables

FLAVORS = ("free", "classical", "boolean", "monotone")


def _coerce(seq: Sequence) -> list:
    return [Fraction(x) if isinstance(x, (int, str)) else x for x in seq]


def _weight(P: Partition, seq: Sequence):
    v = Fraction(1)
    for b in P.blocks:
        v = v * seq[len(b) - 1]
    return v


def _agree(routes: dict[str, list], what: str) -> list:
    names = list(routes)
    first = routes[names[0]]
    for name in names[1:]:
        if routes[name] != first:
            raise InternalInconsistency(f"{what}: route {name!r} disagrees with {names[0]!r}")
    return first


def _sum_over(parts: Callable[[int], list], seq: Sequence, weight: Callable[[Partition], object] | None = None) -> list:
    out = []
    for n in range(1, len(seq) + 1):
        total = Fraction(0)
        for P in parts(n):
            w = 1 if weight is None else weight(P)
            if w:
                total = total + w * _weight(P, seq)
        out.append(total)
    return out


def _stick_character(seq: Sequence, algebra: str) -> ch.LinearForm:
    """Character worth ``seq[m-1]`` on ``J_m`` and 0 on every other partition."""
    return ch.character(lambda P: seq[P.n - 1] if P.k == P.n else 0, algebra, len(seq), "sticks")


def _corolla_infinitesimal(seq: Sequence) -> ch.LinearForm:
    """Infinitesimal character worth ``seq[m-1]`` on ``I_m`` and 0 elsewhere."""
    return ch.infinitesimal(lambda P: seq[P.n - 1] if P.k == 1 else 0, "gap-nc", len(seq), "kappa")


def _at_sticks(form: ch.LinearForm, N: int) -> list:
    return [form((J(n),)) for n in range(1, N + 1)]


# ---------------------------------------------------------------- free

def free_moments_sum(k: Sequence) -> list:
    return _sum_over(enumerate_noncrossing_partitions, _coerce(k))


def free_moments_moebius(k: Sequence) -> list:
    """``(ζ * κ)(J_n)`` with ``κ(J_m) = k_m``."""
    k = _coerce(k)
    phi = ch.convolve_block(ch.zeta(True, len(k)), _stick_character(k, "block-nc"))
    return _at_sticks(phi, len(k))


def free_moments_fixpoint(k: Sequence) -> list:
    """``(E≺(κ) ↶ ζ)(J_n)`` with ``κ(I_m) = k_m``."""
    k = _coerce(k)
    E = ch.solve_fixpoint_prec(_corolla_infinitesimal(k))
    return _at_sticks(ch.coaction_act(E, ch.zeta(True, len(k))), len(k))


def free_moments(k: Sequence, check: bool = True) -> list:
    """``m_n = Σ_{Q ∈ NCP(n)} k_Q``."""
    if not check:
        return free_moments_sum(k)
    return _agree({"sum": free_moments_sum(k), "moebius": free_moments_moebius(k),
                   "fixpoint": free_moments_fixpoint(k)}, "free moments")


def free_cumulants_moebius(m: Sequence) -> list:
    """``(μ * φ)(J_n)`` with ``φ(J_m) = m_m``."""
    m = _coerce(m)
    kappa = ch.convolve_block(ch.moebius(True, len(m)), _stick_character(m, "block-nc"))
    return _at_sticks(kappa, len(m))


def triangular_inverse(moments_of: Callable[[list], list], m: Sequence) -> list:
    """Invert ``m = F(k)`` where ``m_n = k_n + (terms in k_1..k_{n-1})``."""
    m = _coerce(m)
    k: list = []
    for n in range(1, len(m) + 1):
        trial = moments_of(k + [Fraction(0)])
        k.append(m[n - 1] - trial[n - 1])
    return k


def free_cumulants(m: Sequence, check: bool = True) -> list:
    if not check:
        return free_cumulants_moebius(m)
    return _agree({"moebius": free_cumulants_moebius(m),
                   "triangular": triangular_inverse(free_moments_sum, m)}, "free cumulants")


# ---------------------------------------------------------------- classical

def classical_moments_sum(c: Sequence) -> list:
    return _sum_over(enumerate_set_partitions, _coerce(c))


def classical_moments_moebius(c: Sequence) -> list:
    c = _coerce(c)
    phi = ch.convolve_block(ch.zeta(False, len(c)), _stick_character(c, "block-sp"))
    return _at_sticks(phi, len(c))


def classical_moments(c: Sequence, check: bool = True) -> list:
    """``m_n = Σ_{P ∈ SP(n)} c_P``."""
    if not check:
        return classical_moments_sum(c)
    return _agree({"sum": classical_moments_sum(c), "moebius": classical_moments_moebius(c)}, "classical moments")


def classical_cumulants_moebius(m: Sequence) -> list:
    m = _coerce(m)
    kappa = ch.convolve_block(ch.moebius(False, len(m)), _stick_character(m, "block-sp"))
    return _at_sticks(kappa, len(m))


def classical_cumulants(m: Sequence, check: bool = True) -> list:
    if not check:
        return classical_cumulants_moebius(m)
    return _agree({"moebius": classical_cumulants_moebius(m),
                   "triangular": triangular_inverse(classical_moments_sum, m)}, "classical cumulants")


def free_from_classical(c: Sequence) -> list:
    """``k_n = Σ c_P`` over set partitions ``P`` of ``[n]`` whose noncrossing closure is ``I_n``."""
    c = _coerce(c)
    out = []
    for n in range(1, len(c) + 1):
        full = I(n)
        total = Fraction(0)
        for P in enumerate_set_partitions(n):
            if nc_closure(P) == full:
                total = total + _weight(P, c)
        out.append(total)
    return out


# ---------------------------------------------------------------- boolean

def boolean_moments_sum(b: Sequence) -> list:
    return _sum_over(enumerate_noncrossing_partitions, _coerce(b), lambda P: int(is_boolean(P)))


def boolean_moments_action(b: Sequence) -> list:
    """``(ψ≻ ↶ K)(J_n)`` with ``K(J_m) = b_m``."""
    b = _coerce(b)
    return _at_sticks(ch.coaction_act(ch.psi_succ(len(b)), _stick_character(b, "block-nc")), len(b))


def boolean_moments_fixpoint(b: Sequence) -> list:
    """``(E≻(κ) ↶ ζ)(J_n)`` with ``κ(I_m) = b_m``."""
    b = _coerce(b)
    E = ch.solve_fixpoint_succ(_corolla_infinitesimal(b))
    return _at_sticks(ch.coaction_act(E, ch.zeta(True, len(b))), len(b))


def boolean_moments(b: Sequence, check: bool = True) -> list:
    """``m_n = Σ`` over interval partitions of ``∏ b_{|π|}``."""
    if not check:
        return boolean_moments_sum(b)
    return _agree({"sum": boolean_moments_sum(b), "action": boolean_moments_action(b),
                   "fixpoint": boolean_moments_fixpoint(b)}, "boolean moments")


def boolean_cumulants(m: Sequence, check: bool = True) -> list:
    return triangular_inverse(lambda b: boolean_moments(b, check=False), m)


# ---------------------------------------------------------------- monotone

def monotone_weight(P: Partition) -> Fraction:
    return Fraction(heap_order_count(P), math.factorial(P.k))


def monotone_moments_sum(h: Sequence) -> list:
    return _sum_over(enumerate_noncrossing_partitions, _coerce(h), monotone_weight)


def monotone_moments_action(h: Sequence) -> list:
    """``(ψ⋆ ↶ H)(J_n)`` with ``H(J_m) = h_m``."""
    h = _coerce(h)
    return _at_sticks(ch.coaction_act(ch.psi_star(len(h)), _stick_character(h, "block-nc")), len(h))


def monotone_moments_exp(h: Sequence) -> list:
    """``(exp⋆(κ) ↶ ζ)(J_n)`` with ``κ(I_m) = h_m``."""
    h = _coerce(h)
    E = ch.exp_star(_corolla_infinitesimal(h))
    return _at_sticks(ch.coaction_act(E, ch.zeta(True, len(h))), len(h))


def monotone_moments(h: Sequence, check: bool = True) -> list:
    """``m_n = Σ_{P ∈ NCP(n)} ho(P)/k! ∏ h_{|π|}``."""
    if not check:
        return monotone_moments_sum(h)
    return _agree({"sum": monotone_moments_sum(h), "action": monotone_moments_action(h),
                   "exp": monotone_moments_exp(h)}, "monotone moments")


def monotone_cumulants(m: Sequence, check: bool = True) -> list:
    return triangular_inverse(lambda h: monotone_moments(h, check=False), m)


MOMENTS = {"free": free_moments, "classical": classical_moments, "boolean": boolean_moments,
           "monotone": monotone_moments}
CUMULANTS = {"free": free_cumulants, "classical": classical_cumulants, "boolean": boolean_cumulants,
             "monotone": monotone_cumulants}


def moments(flavor: str, cumulants: Sequence, check: bool = True) -> list:
    return MOMENTS[flavor](cumulants, check=check)


def cumulants(flavor: str, moments_: Sequence, check: bool = True) -> list:
    return CUMULANTS[flavor](moments_, check=check)


def symbolic_table(flavor: str, n: int, direction: str = "moments") -> list[Poly]:
    """Moments as polynomials in formal cumulants (or the reverse), degrees ``1..n``."""
    xs = variables(n)
    if direction == "moments":
        return moments(flavor, xs, check=True)
    if direction == "cumulants":
        return cumulants(flavor, xs, check=True)
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------- shuffle lift

def shuffle_lift_check(c: Sequence, N: int | None = None) -> bool:
    """Lift of the classical relation to the gap bialgebra on all set partitions.

    ``γ(Q) = c_Q`` when ``nc(Q) = I_n`` and 0 otherwise; ``ψ = ε + γ ≺ ψ``
    on set-partition words must satisfy ``φ = ψ ∘ nc*`` where ``φ = E≺(κ)``
    on noncrossing words with ``κ = γ ∘ nc*``, and ``Σ_{P ∈ SP(n)} ψ(P)``
    must reproduce the classical moments.
    """
    from .bialgebra_gap import nc_star

    c = _coerce(c)
    N = len(c) if N is None else N
    gamma = ch.infinitesimal(lambda P: _weight(P, c) if nc_closure(P) == I(P.n) else 0, "gap-sp", N, "gamma")
    psi = ch.solve_fixpoint_prec(gamma)

    def kappa_rule(P: Partition):
        return sum((coef * gamma((Q,)) for (Q,), coef in nc_star((P,)).items()), Fraction(0))

    phi = ch.solve_fixpoint_prec(ch.infinitesimal(kappa_rule, "gap-nc", N, "kappa"))
    singles = [P for n in range(1, N + 1) for P in enumerate_noncrossing_partitions(n)]
    words = [(P,) for P in singles] + [(A, B) for A in singles for B in singles if A.n + B.n <= N]
    for w in words:
        pulled = sum((coef * psi(w2) for w2, coef in nc_star(w).items()), Fraction(0))
        if phi(w) != pulled:
            return False
    moments_ = [sum((psi((P,)) for P in enumerate_set_partitions(n)), Fraction(0)) for n in range(1, N + 1)]
    return moments_ == classical_moments_sum(c[:N])
