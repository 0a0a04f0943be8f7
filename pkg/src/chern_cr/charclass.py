"""Chern characters, Chern classes and characteristic numbers of a Kahler-Einstein base.

Cohomology classes of the base ``Y`` are polynomials in the generators

* ``x``  = c_1(L), degree 1
* ``tj`` = ch_j(T^{1,0}Y), degree j, for j = 1..n

and a base is described by the integrals of all degree-n monomials in them.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Any, Mapping, Sequence

from .exact import Poly, PolyRing, Variable, format_rational, to_rational


class BaseDataError(ValueError):
    """Malformed or inconsistent characteristic-number data."""


@lru_cache(maxsize=None)
def cohomology_ring(n: int) -> PolyRing:
    return PolyRing([Variable("x", 1)] + [Variable(f"t{j}", j) for j in range(1, n + 1)])


# ---------------------------------------------------------------------------
# Chern character <-> Chern class


@dataclass(frozen=True)
class ChVector:
    """``(ch_0, ch_1, ..., ch_N)``; entries are Fractions or Polys."""

    entries: tuple[Any, ...]

    def __post_init__(self) -> None:
        entries = tuple(Fraction(e) if isinstance(e, int) else e for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("ChVector needs at least ch_0")

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    @property
    def rank(self) -> Any:
        return self.entries[0]

    def __getitem__(self, k: int) -> Any:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)


def ch_to_chern(ch: ChVector | Sequence[Any]) -> list[Any]:
    """Chern classes ``[c_0, ..., c_N]`` from Chern characters via Newton's identities.

    With power sums ``p_k = k! ch_k``: ``k c_k = sum_{i=1}^k (-1)^{i-1} c_{k-i} p_i``.
    The rank ``ch_0`` does not enter.
    """
    if not isinstance(ch, ChVector):
        ch = ChVector(tuple(ch))
    rank = ch.rank
    if isinstance(rank, Fraction) and (rank.denominator != 1 or rank < 0):
        raise ValueError(f"ch_0 must be a nonnegative integer, got {rank}")
    p = [None] + [ch[k] * factorial(k) for k in range(1, len(ch))]
    c: list[Any] = [Fraction(1)]
    for k in range(1, len(ch)):
        acc: Any = Fraction(0)
        for i in range(1, k + 1):
            term = c[k - i] * p[i]
            acc = acc + term if i % 2 else acc - term
        c.append(acc * Fraction(1, k))
    return c


def chern_to_ch(c: Sequence[Any], rank: Any = None) -> ChVector:
    """Inverse of :func:`ch_to_chern`.

    ``p_k = (-1)^{k-1} k c_k + sum_{i=1}^{k-1} (-1)^{k-1+i} c_{k-i} p_i``.
    ``rank`` becomes ``ch_0``; it defaults to ``len(c) - 1``.
    """
    c = [Fraction(v) if isinstance(v, int) else v for v in c]
    if not c or c[0] != 1:
        raise ValueError("c_0 must be 1")
    p: list[Any] = [None]
    for k in range(1, len(c)):
        acc = c[k] * k
        if k % 2 == 0:
            acc = -acc
        for i in range(1, k):
            term = c[k - i] * p[i]
            acc = acc + term if (k - 1 + i) % 2 == 0 else acc - term
        p.append(acc)
    if rank is None:
        rank = len(c) - 1
    return ChVector((to_rational(rank),) + tuple(p[k] * Fraction(1, factorial(k)) for k in range(1, len(c))))


def twist_ch(ch: ChVector, t: Any) -> ChVector:
    """Chern character after tensoring with a line bundle whose first Chern class is ``t``."""
    out = []
    for k in range(len(ch)):
        acc: Any = Fraction(0)
        for j in range(k + 1):
            acc = acc + (t ** (k - j)) * Fraction(1, factorial(k - j)) * ch[j]
        out.append(acc)
    return ChVector(tuple(out))


# ---------------------------------------------------------------------------
# Characteristic-number tables

_FACTOR = re.compile(r"^(x|t([1-9][0-9]*))\^([0-9]+)$")


def format_key(ring: PolyRing, exps: Sequence[int]) -> str:
    parts = [f"{name}^{e}" for name, e in zip(ring.names, exps) if e]
    return "*".join(parts) if parts else "1"


def parse_key(ring: PolyRing, key: str) -> tuple[int, ...]:
    exps = [0] * len(ring)
    if key == "1":
        return tuple(exps)
    seen = -1
    for factor in key.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise BaseDataError(f"bad monomial factor {factor!r} in key {key!r}")
        name = m.group(1)
        if name not in ring.names:
            raise BaseDataError(f"generator {name!r} out of range in key {key!r}")
        i = ring.index(name)
        if i <= seen:
            raise BaseDataError(f"factors out of order or repeated in key {key!r}")
        seen = i
        exps[i] = int(m.group(3))
    return tuple(exps)


@dataclass(frozen=True)
class ChernNumberTable:
    """Integrals over ``Y`` of the degree-n monomials in ``x, t1..tn``."""

    n: int
    numbers: Mapping[tuple[int, ...], Fraction]

    @property
    def ring(self) -> PolyRing:
        return cohomology_ring(self.n)

    def __getitem__(self, exps: tuple[int, ...]) -> Fraction:
        try:
            return self.numbers[exps]
        except KeyError:
            raise BaseDataError(
                f"no characteristic number for {format_key(self.ring, exps)}"
            ) from None

    def to_keyed(self) -> dict[str, str]:
        ordered = sorted(self.numbers, reverse=True)
        return {format_key(self.ring, m): format_rational(self.numbers[m]) for m in ordered}

    @classmethod
    def from_keyed(cls, n: int, numbers: Mapping[str, Any]) -> ChernNumberTable:
        ring = cohomology_ring(n)
        table = {}
        for key, value in numbers.items():
            exps = parse_key(ring, key)
            if exps in table:
                raise BaseDataError(f"duplicate key {key!r}")
            try:
                table[exps] = to_rational(value)
            except (TypeError, ValueError) as exc:
                raise BaseDataError(f"bad value for {key!r}: {exc}") from None
        return cls(n, table)


@dataclass(frozen=True)
class KEBase:
    """Characteristic data ``(n, lambda, table)`` of a Kahler-Einstein base."""

    n: int
    lam: Fraction
    table: ChernNumberTable
    provenance: str = "custom"
    degrees: tuple[int, ...] | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def ring(self) -> PolyRing:
        return cohomology_ring(self.n)

    def pairing(self, exps: tuple[int, ...]) -> Fraction:
        return self.table[exps]

    def tangent_plus_trivial(self) -> ChVector:
        """``ch(T^{1,0}Y + C)``: rank n+1, higher entries the generators ``tj``."""
        R = self.ring
        return ChVector((Fraction(self.n + 1),) + tuple(R.gen(f"t{j}") for j in range(1, self.n + 1)))

    def tangent(self) -> ChVector:
        R = self.ring
        return ChVector((Fraction(self.n),) + tuple(R.gen(f"t{j}") for j in range(1, self.n + 1)))

    def lam_x(self) -> Poly:
        return self.ring.gen("x").scale(self.lam)

    @cached_property
    def violations(self) -> tuple[str, ...]:
        return tuple(check_table(self))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "lambda": format_rational(self.lam), "numbers": self.table.to_keyed()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any] | str) -> KEBase:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = data["n"]
            lam = data["lambda"]
            numbers = data["numbers"]
        except (KeyError, TypeError):
            raise BaseDataError('base JSON needs "n", "lambda" and "numbers"') from None
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise BaseDataError(f"n must be a positive integer, got {n!r}")
        if not isinstance(numbers, Mapping):
            raise BaseDataError('"numbers" must be an object')
        try:
            lam = to_rational(lam)
        except (TypeError, ValueError) as exc:
            raise BaseDataError(f"bad lambda: {exc}") from None
        warnings = ("lambda = 0: every invariant vanishes",) if lam == 0 else ()
        return cls(n, lam, ChernNumberTable.from_keyed(n, numbers), warnings=warnings)


def check_table(base: KEBase) -> list[str]:
    """Completeness and Einstein consistency of the characteristic numbers.

    Consistency: for every degree-(n-1) monomial m,
    ``int t1*m = -(n+1) * lambda * int x*m``, because ``c_1(Y) = (n+1) lambda c_1(L^{-1})``.
    """
    n = base.n
    R = base.ring
    numbers = base.table.numbers
    problems: list[str] = []
    if base.table.n != n:
        problems.append(f"table dimension {base.table.n} differs from base dimension {n}")
        return problems
    wanted = R.monomials_of_degree(n)
    wanted_set = set(wanted)
    for m in wanted:
        if m not in numbers:
            problems.append(f"missing entry {format_key(R, m)}")
    for m in sorted(numbers, reverse=True):
        if m not in wanted_set:
            problems.append(f"unexpected entry {format_key(R, m)} (degree {R.degree_of(m)} != {n})")
    ix, it1 = R.index("x"), R.index("t1")
    for m in R.monomials_of_degree(n - 1):
        mx = list(m)
        mx[ix] += 1
        mt = list(m)
        mt[it1] += 1
        mx, mt = tuple(mx), tuple(mt)
        if mx not in numbers or mt not in numbers:
            continue
        expected = -(n + 1) * base.lam * numbers[mx]
        if numbers[mt] != expected:
            problems.append(
                f"Einstein consistency fails at m = {format_key(R, m)}: "
                f"int t1*m = {format_rational(numbers[mt])}, expected {format_rational(expected)}"
            )
    return problems


def integrate(base: Any, cls: Poly | Any) -> Any:
    """Integrate a degree-n class over the base using its characteristic numbers.

    ``base`` only needs ``n``, ``ring`` and ``pairing(exps)``; the result lives
    in whatever ring the pairings and coefficients live in.
    """
    if not isinstance(cls, Poly):
        if cls:
            raise ValueError("a nonzero constant is not a top-degree class unless n = 0")
        return Fraction(0)
    if cls.ring != base.ring:
        raise ValueError(f"class lives in {cls.ring!r}, base uses {base.ring!r}")
    total: Any = Fraction(0)
    for m, c in cls.items():
        deg = cls.ring.degree_of(m)
        if deg != base.n:
            raise ValueError(
                f"cannot integrate monomial {cls.ring.format_monomial(m)} of degree {deg} over a base of dimension {base.n}"
            )
        total = total + c * base.pairing(m)
    return total


def bochner_ch(base: Any, k: int) -> Any:
    """Cohomology class of ch_k of the Bochner curvature, i.e. ch_k((TY + C) (x) L^lambda)."""
    if not 0 <= k <= base.n:
        raise ValueError(f"k must lie in 0..{base.n}, got {k}")
    twisted = twist_ch(ChVector(base.tangent_plus_trivial().entries[: k + 1]), base.lam_x())
    value = twisted[k]
    return value if isinstance(value, Poly) else base.ring.constant(value)
