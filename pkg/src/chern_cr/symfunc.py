"""Partitions and the power-sum polynomials used for complete intersections.

Everything is expressed in the normalized power sums
``s_k = (d_1^k + ... + d_n^k) / k!`` with ``weight(s_k) = k``; the degree
variables ``d_i`` are never introduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .exact import Poly, PolyRing, Variable
from .linalg import RatMatrix


@dataclass(frozen=True, order=True)
class Partition:
    """A tuple ``(p_1, ..., p_n)`` of multiplicities with ``sum(k * p_k) == n``."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one entry")
        if any(p < 0 for p in parts):
            raise ValueError(f"negative multiplicity in {parts}")
        if self.weight != len(parts):
            raise ValueError(
                f"{parts} has weight {self.weight} but length {len(parts)}"
            )

    @classmethod
    def parse(cls, text: str) -> Partition:
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(k * p for k, p in enumerate(self.parts, start=1))

    def __getitem__(self, k: int) -> int:
        """Multiplicity of ``k`` (1-based, matching the usual subscript)."""
        return self.parts[k - 1]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, lexicographically descending in ``(p_1, p_2, ...)``.

    >>> [str(p) for p in partitions(3)]
    ['3,0,0', '1,1,0', '0,0,1']
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    out: list[tuple[int, ...]] = []

    def rec(k: int, left: int, acc: list[int]) -> None:
        # assign multiplicities for parts k, k+1, ..., n; part 1 absorbs the rest
        if k > n:
            if left == 0:
                out.append(tuple(acc))
            return
        if k == 1:
            for m in range(left, -1, -1):
                acc.append(m)
                rec(2, left - m, acc)
                acc.pop()
            return
        for m in range(left // k, -1, -1):
            acc.append(m)
            rec(k + 1, left - m * k, acc)
            acc.pop()

    rec(1, n, [])
    out.sort(reverse=True)
    return tuple(Partition(p) for p in out)


@lru_cache(maxsize=None)
def power_sum_ring(n: int) -> PolyRing:
    return PolyRing(Variable(f"s{k}", k) for k in range(1, n + 1))


def power_sums(d: Sequence[int]) -> list[Fraction]:
    """Numeric ``[s_1(d), ..., s_n(d)]``."""
    return [Fraction(sum(di**k for di in d), factorial(k)) for k in range(1, len(d) + 1)]


def nu_k(n: int, k: int) -> Poly:
    """Top-degree part of the Bochner Chern-character class on ``Y_d``, as a polynomial in s."""
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in 2..{n}, got {k}")
    R = power_sum_ring(n)
    s = R.gens()
    total = (s[0] ** k).scale(Fraction(1, (n + 1) ** (k - 1) * factorial(k)))
    for j in range(1, k + 1):
        coeff = Fraction(1, (n + 1) ** (k - j) * factorial(k - j))
        total = total - (s[0] ** (k - j) * s[j - 1]).scale(coeff)
    return total


def p_varsigma(n: int, part: Partition) -> Poly:
    if part.n != n:
        raise ValueError(f"{part} is not a partition of {n}")
    R = power_sum_ring(n)
    result = (R.gen("s1").scale(Fraction(1, n + 1))) ** part[1]
    for k in range(2, n + 1):
        if part[k]:
            result = result * nu_k(n, k) ** part[k]
    return result


def monomial_basis(n: int) -> list[tuple[int, ...]]:
    """Exponent vectors ``s_1^{a_1}...s_n^{a_n}`` of degree n, indexed like ``partitions(n)``."""
    return [p.parts for p in partitions(n)]


def coefficient_matrix(polys: Iterable[Poly], basis: Sequence[tuple[int, ...]]) -> RatMatrix:
    return RatMatrix([[p.coefficient(m) for m in basis] for p in polys], cols=len(basis))


def transition_matrix(n: int) -> tuple[RatMatrix, Fraction]:
    """Matrix expressing each ``p_varsigma`` in the degree-n monomial basis, with its determinant."""
    basis = monomial_basis(n)
    mat = coefficient_matrix((p_varsigma(n, p) for p in partitions(n)), basis)
    return mat, mat.det()


def specialize(q: Poly, d: Sequence[int]) -> Fraction:
    """Evaluate a power-sum polynomial at an actual degree tuple."""
    return q.evaluate(power_sums(d))


def product_of_degrees(d: Sequence[int]) -> int:
    return prod(d)
