"""Finite linear combinations with exact rational coefficients.

One dict-backed class serves every layer: tensor pairs and tuples of ints,
partitions, normal-ordered operator words, plain ints.  Keys must be hashable;
zero coefficients are never stored, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterator

Scalar = int | Fraction

__all__ = ["LinComb"]


class LinComb:
    """Immutable-by-convention mapping basis-key -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Any, Scalar] | None = None):
        clean: dict[Any, Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[k] = c
        self.terms = clean

    @classmethod
    def single(cls, key: Any, coeff: Scalar = 1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def __iter__(self) -> Iterator[tuple[Any, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key: Any) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("LinComb is not hashable")

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return LinComb(out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return LinComb(out)

    def __neg__(self) -> "LinComb":
        return LinComb({k: -c for k, c in self.terms.items()})

    def scale(self, c: Scalar) -> "LinComb":
        c = Fraction(c)
        if not c:
            return LinComb()
        return LinComb({k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c: Scalar) -> "LinComb":
        return self.scale(c)

    def map_keys(self, fn: Callable[[Any], Any]) -> "LinComb":
        """Relabel basis keys, merging collisions."""
        out: dict[Any, Fraction] = {}
        for k, c in self.terms.items():
            nk = fn(k)
            out[nk] = out.get(nk, Fraction(0)) + c
        return LinComb(out)

    def bilinear(self, other: "LinComb",
                 prod: Callable[[Any, Any], "LinComb"]) -> "LinComb":
        """Extend a basis-level product (returning a LinComb) bilinearly."""
        out: dict[Any, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                for k, c in prod(ka, kb).terms.items():
                    out[k] = out.get(k, Fraction(0)) + ca * cb * c
        return LinComb(out)

    def sorted_terms(self, key: Callable[[Any], Any] | None = None):
        return sorted(self.terms.items(), key=(lambda kv: key(kv[0])) if key else None)

    def __repr__(self) -> str:
        if not self.terms:
            return "LinComb(0)"
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            parts.append(f"{c}*{k!r}")
        return "LinComb(" + " + ".join(parts) + ")"
