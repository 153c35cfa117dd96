"""Exact monomial lattice and normalized one-parameter subgroups.

Everything downstream is built on three primitives: exponent vectors of a
fixed total degree, integer weight vectors of diagonal one-parameter
subgroups of the torus, and the pairing between them.  All arithmetic is
exact (``int`` and ``fractions.Fraction``); no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class Monomial:
    """A monomial in ``nvars`` coordinates, stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if not exps:
            raise DomainError("monomial needs at least one coordinate")
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def reversed(self) -> "Monomial":
        """The monomial with coordinate order flipped (x_i -> x_{n-i})."""
        return Monomial(tuple(reversed(self.exponents)))

    def variable_index(self) -> int:
        """Index i when this monomial is the single variable x_i."""
        if self.degree != 1:
            raise DomainError(f"{self} is not a single variable")
        return self.exponents.index(1)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


def monomial(*exponents: int) -> Monomial:
    return Monomial(tuple(exponents))


def variable(i: int, n: int) -> Monomial:
    """The degree-1 monomial x_i in n+1 coordinates."""
    if not 0 <= i <= n:
        raise DomainError(f"variable index {i} outside 0..{n}")
    return Monomial(tuple(1 if k == i else 0 for k in range(n + 1)))


def grlex_key(m: Monomial) -> tuple:
    """Graded-lexicographic sort key with x_0 > x_1 > ... > x_n.

    Sorting ascending by this key puts x_0^d first and x_n^d last within a
    fixed degree, which is the canonical order used in every emitted table.
    """
    return (m.degree, tuple(-e for e in m.exponents))


def sort_monomials(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(monomials, key=grlex_key))


@lru_cache(maxsize=None)
def enumerate_monomials(d: int, n: int) -> tuple[Monomial, ...]:
    """All monomials of total degree d in n+1 coordinates, canonical order.

    There are C(d+n, n) of them.  Combinations-with-replacement of variable
    indices, in its native order, yields exactly the graded-lex order.
    """
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    out = []
    for combo in combinations_with_replacement(range(n + 1), d):
        exps = [0] * (n + 1)
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps)))
    return tuple(out)


@dataclass(frozen=True)
class OneParameterSubgroup:
    """A normalized diagonal one-parameter subgroup of SL(n+1).

    Weights are non-increasing, sum to zero, and are primitive (gcd 1).
    Non-primitive input is rescaled; the sign is fixed so that the first
    weight dominates the last.
    """

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(v) for v in self.weights)
        if len(w) < 2:
            raise DomainError("need at least two weights")
        if all(v == 0 for v in w):
            raise DomainError("weights cannot be all zero")
        g = 0
        for v in w:
            g = gcd(g, abs(v))
        w = tuple(v // g for v in w)
        if w[0] < w[-1]:
            w = tuple(-v for v in w)
        object.__setattr__(self, "weights", w)
        if sum(w) != 0:
            raise DomainError(f"weights {w} do not sum to zero")
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise DomainError(f"weights {w} are not non-increasing")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def dual(self) -> "OneParameterSubgroup":
        """The dual subgroup (-r_n, ..., -r_0)."""
        return OneParameterSubgroup(tuple(-v for v in reversed(self.weights)))

    @property
    def is_self_dual(self) -> bool:
        return self.dual() == self

    def __str__(self) -> str:
        return "diag" + str(self.weights)

    def __repr__(self) -> str:
        return f"OneParameterSubgroup({self.weights})"


def one_ps(*weights: int) -> OneParameterSubgroup:
    return OneParameterSubgroup(tuple(weights))


def dual(lam: OneParameterSubgroup) -> OneParameterSubgroup:
    return lam.dual()


def pairing(v: Monomial, lam: OneParameterSubgroup) -> int:
    """The integer pairing sum_i exponent_i * weight_i."""
    if v.nvars != lam.nvars:
        raise DomainError(
            f"dimension mismatch: monomial has {v.nvars} coordinates, "
            f"subgroup has {lam.nvars}"
        )
    return sum(e * r for e, r in zip(v.exponents, lam.weights))


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc
