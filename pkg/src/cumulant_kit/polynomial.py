"""Sparse polynomials with rational coefficients in variables ``x1, x2, ...``.

Just enough ring arithmetic to push formal moment/cumulant symbols through
the same code paths as numbers.
"""

from __future__ import annotations

from fractions import Fraction

Exponents = tuple[tuple[int, int], ...]  # sorted (variable index, power) pairs


def _mul_exp(a: Exponents, b: Exponents) -> Exponents:
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Exponents, Fraction] = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls({((i, 1),): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c})

    @staticmethod
    def lift(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly.const(x)

    def __add__(self, other) -> "Poly":
        other = Poly.lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.lift(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = Poly.lift(other)
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _mul_exp(k1, k2)
                out[k] = out.get(k, 0) + v1 * v2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if set(other.terms) != {()}:
                raise ZeroDivisionError("division by a nonconstant polynomial")
            other = other.terms[()]
        return Poly({k: v / other for k, v in self.terms.items()})

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self.terms == Poly.lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exps: dict[int, int]) -> Fraction:
        return self.terms.get(tuple(sorted((i, e) for i, e in exps.items() if e)), Fraction(0))

    def evaluate(self, values) -> Fraction:
        """Substitute ``x_i = values[i-1]``."""
        total = Fraction(0)
        for k, c in self.terms.items():
            t = c
            for i, e in k:
                t *= Fraction(values[i - 1]) ** e
            total += t
        return total

    def ordered_terms(self, ascending: bool = False) -> list[tuple[Exponents, Fraction]]:
        """Graded lex: higher total degree first, ties broken lexicographically on dense exponent vectors."""
        width = max((i for k in self.terms for i, _ in k), default=0)

        def key(k):
            dense = [0] * width
            for i, e in k:
                dense[i - 1] = e
            return (sum(dense), dense)

        items = sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        return items[::-1] if ascending else items

    def to_string(self, name: str = "x", ascending: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, c in self.ordered_terms(ascending):
            mono = "*".join(f"{name}{i}" + (f"^{e}" if e > 1 else "") for i, e in k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return self.to_string()


def variables(count: int) -> list[Poly]:
    return [Poly.var(i) for i in range(1, count + 1)]
