"""Sparse multivariate polynomials with exact integer coefficients.

Variables are x1, x2, x3, ...; a monomial stores its exponent vector with
trailing zeros normalized away, so x1*x3 is ``Monomial((1, 0, 1))`` and the
constant monomial is ``Monomial(())``.  Coefficients are Python ints, so
nothing ever overflows.  All values are immutable and safe to share.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass


class ZeroPolynomialError(ValueError):
    """Raised for operations undefined on the zero polynomial."""


@dataclass(frozen=True)
class Monomial:
    """A product of variable powers, as a normalized exponent tuple."""

    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls) -> Monomial:
        return cls(())

    @classmethod
    def variable(cls, i: int, power: int = 1) -> Monomial:
        """The monomial x_i**power (i is 1-based)."""
        if i < 1:
            raise ValueError(f"variable index must be positive, got {i}")
        return cls((0,) * (i - 1) + (power,))

    @classmethod
    def from_powers(cls, powers: Mapping[int, int]) -> Monomial:
        """Build from a map {variable index: exponent}, 1-based indices."""
        if not powers:
            return cls(())
        width = max(powers)
        exps = [0] * width
        for i, e in powers.items():
            exps[i - 1] = e
        return cls(tuple(exps))

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def exponent(self, i: int) -> int:
        """Exponent of x_i (1-based); zero beyond the stored width."""
        return self.exponents[i - 1] if i <= len(self.exponents) else 0

    def __mul__(self, other: Monomial) -> Monomial:
        a, b = self.exponents, other.exponents
        if len(a) < len(b):
            a, b = b, a
        return Monomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def render(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


class Polynomial:
    """Finite map from monomials to nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    raise TypeError(f"expected Monomial key, got {type(m).__name__}")
                if c:
                    cleaned[m] = c
        self._terms = cleaned

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls({Monomial.one(): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: int = 1) -> Polynomial:
        return cls({m: coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def min_total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("undefined degree: zero polynomial")
        return min(m.total_degree for m in self._terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        merged = dict(self._terms)
        for m, c in other._terms.items():
            s = merged.get(m, 0) + c
            if s:
                merged[m] = s
            else:
                merged.pop(m, None)
        return Polynomial(merged)

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, k: int) -> Polynomial:
        return Polynomial({m: k * c for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(
            self._terms.items(),
            key=lambda item: (item[0].total_degree, item[0].exponents),
            reverse=True,
        )

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if m == Monomial.one():
                parts.append(str(c))
            elif c == 1:
                parts.append(m.render())
            else:
                parts.append(f"{c}*{m.render()}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


def poly_from_monomials(ms: Iterable[Monomial]) -> Polynomial:
    """Sum the monomials with multiplicity; coefficients count occurrences."""
    terms: dict[Monomial, int] = {}
    for m in ms:
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(terms)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_min_total_degree(p: Polynomial) -> int:
    return p.min_total_degree()
