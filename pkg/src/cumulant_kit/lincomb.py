"""Finitely supported linear combinations with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator


class LinComb:
    """A sparse vector ``{basis element: coefficient}``; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable[tuple[Hashable, object]] | None = None):
        self._terms: dict = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            self.add(key, c)

    @classmethod
    def basis(cls, key: Hashable) -> "LinComb":
        out = cls()
        out._terms[key] = Fraction(1)
        return out

    def add(self, key: Hashable, c=1) -> None:
        c = self._terms.get(key, 0) + c
        if c:
            self._terms[key] = c
        else:
            self._terms.pop(key, None)

    def coeff(self, key: Hashable):
        return self._terms.get(key, Fraction(0))

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __add__(self, other: "LinComb") -> "LinComb":
        out = LinComb(self._terms)
        for k, c in other.items():
            out.add(k, c)
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "LinComb":
        return LinComb((k, scalar * c) for k, c in self.items())

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def map_keys(self, f: Callable) -> "LinComb":
        """Apply a basis map ``f`` linearly (merging keys that collide)."""
        return LinComb((f(k), c) for k, c in self.items())

    def expand(self, f: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Apply a linear map given on basis elements."""
        out = LinComb()
        for k, c in self.items():
            for k2, c2 in f(k).items():
                out.add(k2, c * c2)
        return out

    def sorted_items(self, key=None) -> list:
        return sorted(self.items(), key=key or (lambda kv: repr(kv[0])))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{k!r}" for k, c in self.sorted_items())


def product(parts: Iterable[LinComb], combine: Callable[[Hashable, Hashable], Hashable], unit: Hashable) -> LinComb:
    """Multiply linear combinations, multiplying basis elements with ``combine``."""
    acc = {unit: Fraction(1)}
    for p in parts:
        nxt = LinComb()
        for k1, c1 in acc.items():
            for k2, c2 in p.items():
                nxt.add(combine(k1, k2), c1 * c2)
        acc = dict(nxt.items())
    return LinComb(acc)
