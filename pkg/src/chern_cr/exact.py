"""Exact scalars and sparse polynomials over weighted variables.

Scalars are :class:`fractions.Fraction`.  A :class:`Poly` lives in a
:class:`PolyRing`, which fixes an ordered tuple of :class:`Variable` objects;
monomials are exponent tuples over that order.  Coefficients are normally
Fractions, but any exact commutative ring element that supports ``+``, ``*``,
unary ``-`` and truthiness works as well (in particular a :class:`Poly` over a
*different* ring), which is how cohomology classes with symbolic coefficients
are represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Iterable, Iterator, Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "to_rational",
    "format_rational",
    "Variable",
    "PolyRing",
    "Poly",
    "poly_arith",
    "homogeneous_part",
]


def to_rational(value: Any) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction.

    Floats are rejected: nothing in this package is allowed to be inexact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(value: Any) -> str:
    """Serialize as ``"p/q"``, dropping the denominator when it is 1."""
    q = to_rational(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Variable:
    name: str
    weight: int = 1

    def __post_init__(self) -> None:
        if not self.name.isidentifier():
            raise ValueError(f"invalid variable name {self.name!r}")
        if self.weight < 1:
            raise ValueError("variable weight must be positive")


class PolyRing:
    """An ordered set of weighted variables.

    Registration order is also the monomial order used for printing:
    graded by weighted degree, then lexicographic on the exponent vector.
    """

    __slots__ = ("variables", "_index", "_hash")

    def __init__(self, variables: Iterable[Variable | tuple[str, int] | str]):
        vs = []
        for v in variables:
            if isinstance(v, Variable):
                vs.append(v)
            elif isinstance(v, str):
                vs.append(Variable(v))
            else:
                vs.append(Variable(*v))
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.variables: tuple[Variable, ...] = tuple(vs)
        self._index = {v.name: i for i, v in enumerate(vs)}
        self._hash = hash(self.variables)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and self.variables == other.variables

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PolyRing({', '.join(v.name for v in self.variables)})"

    def __len__(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.constant(1)

    def constant(self, c: Any) -> Poly:
        if isinstance(c, int):
            c = Fraction(c)
        return Poly(self, {(0,) * len(self.variables): c})

    def gen(self, name: str) -> Poly:
        exps = [0] * len(self.variables)
        exps[self.index(name)] = 1
        return Poly(self, {tuple(exps): Fraction(1)})

    def gens(self) -> tuple[Poly, ...]:
        return tuple(self.gen(v.name) for v in self.variables)

    def monomial(self, exps: Sequence[int], coeff: Any = 1) -> Poly:
        exps = tuple(int(e) for e in exps)
        if len(exps) != len(self.variables) or min(exps, default=0) < 0:
            raise ValueError(f"bad exponent vector {exps} for {self!r}")
        if isinstance(coeff, int):
            coeff = Fraction(coeff)
        return Poly(self, {exps: coeff})

    def degree_of(self, exps: Sequence[int]) -> int:
        return sum(e * v.weight for e, v in zip(exps, self.variables))

    def monomials_of_degree(self, degree: int) -> list[tuple[int, ...]]:
        """All exponent vectors of the given weighted degree, in print order."""
        out: list[tuple[int, ...]] = []
        ws = self.weights

        def rec(i: int, left: int, acc: list[int]) -> None:
            if i == len(ws):
                if left == 0:
                    out.append(tuple(acc))
                return
            for e in range(left // ws[i], -1, -1):
                acc.append(e)
                rec(i + 1, left - e * ws[i], acc)
                acc.pop()

        rec(0, degree, [])
        return out

    def format_monomial(self, exps: Sequence[int]) -> str:
        parts = []
        for e, v in zip(exps, self.variables):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts)


def _is_zero(c: Any) -> bool:
    return not c


class Poly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], Any]):
        self.ring = ring
        self._terms = {m: c for m, c in terms.items() if not _is_zero(c)}
        self._hash = None

    # -- basic protocol ---------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], Any]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], Any]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self._scalar_terms(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def _scalar_terms(self, c: Any) -> dict:
        return {(0,) * len(self.ring): c} if c else {}

    def _coerce(self, other: Any) -> Poly:
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        if isinstance(other, int):
            other = Fraction(other)
        return Poly(self.ring, self._scalar_terms(other))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Any) -> Poly:
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> Poly:
        if isinstance(other, Poly) and other.ring == self.ring:
            terms: dict[tuple[int, ...], Any] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    terms[m] = terms[m] + c if m in terms else c
            return Poly(self.ring, terms)
        return self.scale(other)

    def __rmul__(self, other: Any) -> Poly:
        # other is never a Poly of this ring here; coefficients commute
        return self.scale(other)

    def scale(self, c: Any) -> Poly:
        """Multiply every coefficient by the scalar ``c`` (any coefficient-ring element)."""
        if isinstance(c, int):
            c = Fraction(c)
        if _is_zero(c):
            return Poly(self.ring, {})
        return Poly(self.ring, {m: v * c for m, v in self._terms.items()})

    def __truediv__(self, c: Any) -> Poly:
        if isinstance(c, Poly):
            raise TypeError("polynomial division is not supported")
        return self.scale(Fraction(1) / to_rational(c))

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- grading ----------------------------------------------------------
    def degree(self) -> int:
        """Maximum weighted degree; -1 for the zero polynomial."""
        return max((self.ring.degree_of(m) for m in self._terms), default=-1)

    def homogeneous_part(self, degree: int) -> Poly:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return Poly(
            self.ring,
            {m: c for m, c in self._terms.items() if self.ring.degree_of(m) == degree},
        )

    def homogeneous_components(self) -> dict[int, Poly]:
        buckets: dict[int, dict] = {}
        for m, c in self._terms.items():
            buckets.setdefault(self.ring.degree_of(m), {})[m] = c
        return {d: Poly(self.ring, t) for d, t in sorted(buckets.items())}

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree_of(m) for m in self._terms}) <= 1

    # -- coefficients and evaluation --------------------------------------
    def coefficient(self, exps: Sequence[int]) -> Any:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Any:
        return self.coefficient((0,) * len(self.ring))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Any]]:
        return sorted(
            self._terms.items(),
            key=lambda mc: (self.ring.degree_of(mc[0]), mc[0]),
            reverse=True,
        )

    def evaluate(self, values: Sequence[Any] | Mapping[str, Any], one: Any = None) -> Any:
        """Substitute a value for every variable and sum.

        ``values`` is either a sequence aligned with the ring's variables or
        a mapping by variable name.  Values may be Fractions or Polys over some
        other ring; ``one`` is the multiplicative identity used for the empty
        monomial (defaults to Fraction 1, or the ring one of the first Poly
        value).
        """
        if isinstance(values, Mapping):
            values = [values[name] for name in self.ring.names]
        if len(values) != len(self.ring):
            raise ValueError("wrong number of substitution values")
        if one is None:
            one = next((v.ring.one() for v in values if isinstance(v, Poly)), Fraction(1))
        powers: dict[tuple[int, int], Any] = {}

        def power(i: int, e: int) -> Any:
            key = (i, e)
            if key not in powers:
                powers[key] = values[i] ** e
            return powers[key]

        total = one * 0
        for m, c in self._terms.items():
            term = one
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term * c
        return total

    def substitute(self, mapping: Mapping[str, Any]) -> Poly:
        """Replace some variables by polynomials of the same ring."""
        values = [mapping.get(name, self.ring.gen(name)) for name in self.ring.names]
        return self.evaluate(values, one=self.ring.one())

    def map_coefficients(self, fn) -> Poly:
        return Poly(self.ring, {m: fn(c) for m, c in self._terms.items()})

    def to_ring(self, ring: PolyRing) -> Poly:
        """Re-express in a ring containing all variables that actually occur."""
        terms = {}
        for m, c in self._terms.items():
            exps = [0] * len(ring)
            for e, name in zip(m, self.ring.names):
                if e:
                    exps[ring.index(name)] = e
            terms[tuple(exps)] = c
        return Poly(ring, terms)

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m, c in self.sorted_terms():
            mono = self.ring.format_monomial(m)
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                if not mono:
                    body = format_rational(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{format_rational(mag)}*{mono}"
            else:
                neg = False
                body = f"({c})" + (f"*{mono}" if mono else "")
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """``op`` is one of ``"add"``, ``"sub"``, ``"mul"``."""
    if isinstance(a, Poly) and isinstance(b, Poly) and a.ring != b.ring:
        raise ValueError("operands live in different rings")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def homogeneous_part(p: Poly, degree: int) -> Poly:
    return p.homogeneous_part(degree)
