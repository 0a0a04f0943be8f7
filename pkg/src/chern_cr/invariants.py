"""CR invariants of circle bundles over Kahler-Einstein bases.

For the circle bundle ``S`` of ``(Y, L, h)`` with Einstein constant ``(n+1) lam``:

* ``I_varsigma(S) = -lam * int_Y (lam x)^{p_1} prod_{k>=2} B_k^{p_k}``,
  where ``B_k`` is :func:`~chern_cr.charclass.bochner_ch`;
* ``mu(S) = -lam * sum_m int_Y (lam x)^{n-m} c_m(TY)``.

Functions here accept any base object exposing ``n``, ``lam``, ``ring``,
``pairing``, ``tangent``, ``tangent_plus_trivial`` and ``lam_x``; the
complete-intersection family in :mod:`chern_cr.family` reuses them with
symbolic coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Any, Mapping, Sequence

from .charclass import (
    BaseDataError,
    ChernNumberTable,
    KEBase,
    bochner_ch,
    ch_to_chern,
    check_table,
    cohomology_ring,
    integrate,
)
from .exact import Poly, PolyRing, Variable
from .symfunc import Partition, partitions, power_sums


class InvalidBaseError(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("invalid base: " + "; ".join(self.violations))


class DegreeError(ValueError):
    pass


@lru_cache(maxsize=None)
def invariant_ring(n: int) -> PolyRing:
    """Ring of invariant polynomials of (n+1)x(n+1) matrices, in the basis ch_1..ch_{n+1}."""
    return PolyRing(Variable(f"ch{k}", k) for k in range(1, n + 2))


@dataclass(frozen=True)
class InvPoly:
    """An invariant polynomial of weighted degree at most ``n``."""

    poly: Poly
    n: int

    def __post_init__(self) -> None:
        if self.poly.ring != invariant_ring(self.n):
            raise ValueError(f"polynomial must live in {invariant_ring(self.n)!r}")
        if self.poly.degree() > self.n:
            raise DegreeError(f"weighted degree {self.poly.degree()} > {self.n}")

    @classmethod
    def from_poly(cls, poly: Poly, n: int) -> InvPoly:
        return cls(poly.to_ring(invariant_ring(n)) if poly.ring != invariant_ring(n) else poly, n)

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class Decomposition:
    """``phi = ch1 * remainder + sum_p coefficients[p] * Phi_p``."""

    coefficients: dict[Partition, Fraction]
    remainder: Poly
    n: int

    def reconstruct(self) -> Poly:
        R = invariant_ring(self.n)
        total = R.gen("ch1") * self.remainder
        for part, c in self.coefficients.items():
            total = total + phi_varsigma(self.n, part).scale(c)
        return total


# ---------------------------------------------------------------------------
# bases


def complete_intersection_base(n: int, d: Sequence[int]) -> KEBase:
    """Base data of a smooth complete intersection ``Y_d`` in CP^{2n}, with L = O(-1).

    With ``tau = c_1(O(1))``: ``x = -tau``, ``tj = (C_j - s_j(d)) tau^j`` where
    ``C_j = (2n+1)/j!``, and ``int tau^n = d_1 ... d_n``.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    d = tuple(d)
    if len(d) != n:
        raise ValueError(f"need {n} degrees, got {len(d)}")
    if any(not isinstance(di, int) or di < 1 for di in d):
        raise ValueError(f"degrees must be positive integers, got {d}")
    s = power_sums(d)
    lam = Fraction(2 * n + 1 - s[0], n + 1)
    tcoef = [Fraction(2 * n + 1, factorial(j)) - s[j - 1] for j in range(1, n + 1)]
    volume = prod(d)
    ring = cohomology_ring(n)
    numbers = {}
    for m in ring.monomials_of_degree(n):
        value = Fraction((-1) ** m[0] * volume)
        for j, b in enumerate(m[1:], start=1):
            value *= tcoef[j - 1] ** b
        numbers[m] = value
    warnings = []
    if s[0] <= 2 * n + 1:
        warnings.append(
            f"s1(d) = {s[0]} <= 2n+1 = {2 * n + 1}: no Kahler-Einstein metric with L = O(-1) is "
            "guaranteed; values are formal"
        )
    if lam == 0:
        warnings.append("lambda = 0: every invariant vanishes")
    return KEBase(n, lam, ChernNumberTable(n, numbers), provenance="complete_intersection",
                  degrees=d, warnings=tuple(warnings))


def validate_base(base: KEBase) -> list[str]:
    """Empty list when the base is usable, otherwise human-readable violations."""
    return check_table(base)


def _require_valid(base: Any) -> None:
    violations = getattr(base, "violations", ())
    if violations:
        raise InvalidBaseError(violations)


# ---------------------------------------------------------------------------
# invariants


def I_varsigma(base: Any, part: Partition) -> Any:
    n = base.n
    if part.n != n:
        raise ValueError(f"{part} is not a partition of {n}")
    _require_valid(base)
    cls = base.lam_x() ** part[1]
    for k in range(2, n + 1):
        if part[k]:
            cls = cls * bochner_ch(base, k) ** part[k]
    return -base.lam * integrate(base, cls)


def burns_epstein(base: Any) -> Any:
    _require_valid(base)
    n = base.n
    c = ch_to_chern(base.tangent())
    lx = base.lam_x()
    total = base.ring.zero()
    for m in range(n + 1):
        cm = c[m] if isinstance(c[m], Poly) else base.ring.constant(c[m])
        total = total + lx ** (n - m) * cm
    return -base.lam * integrate(base, total)


def phi_varsigma(n: int, part: Partition) -> Poly:
    """``prod_{k>=2} ch_k^{p_k}``, the generator indexed by ``part``."""
    R = invariant_ring(n)
    result = R.one()
    for k in range(2, n + 1):
        if part[k]:
            result = result * R.gen(f"ch{k}") ** part[k]
    return result


def decompose_invariant(phi: InvPoly | Poly, n: int | None = None) -> Decomposition:
    if isinstance(phi, Poly):
        if n is None:
            n = len(phi.ring) - 1
        phi = InvPoly.from_poly(phi, n)
    n = phi.n
    R = invariant_ring(n)
    coefficients = {p: Fraction(0) for p in partitions(n)}
    remainder: dict[tuple[int, ...], Any] = {}
    for m, c in phi.poly.items():
        if m[0]:
            key = (m[0] - 1,) + m[1:]
            remainder[key] = remainder.get(key, 0) + c
            continue
        if m[n]:
            raise DegreeError(f"ch{n + 1} cannot occur in degree <= {n}")
        weight = R.degree_of(m)
        part = Partition((n - weight,) + m[1:n])
        coefficients[part] += c
    return Decomposition(coefficients, Poly(R, remainder), n)


def I_phi(base: Any, phi: InvPoly | Poly) -> Any:
    """Direct evaluation: substitute Bochner classes into each homogeneous part of phi."""
    if isinstance(phi, Poly):
        phi = InvPoly.from_poly(phi, base.n)
    n = base.n
    if phi.n != n:
        raise ValueError(f"invariant polynomial is for n = {phi.n}, base has n = {n}")
    _require_valid(base)
    R = base.ring
    values = [bochner_ch(base, k) for k in range(1, n + 1)] + [R.zero()]
    lx = base.lam_x()
    total = R.zero()
    for m, part in phi.poly.homogeneous_components().items():
        total = total + lx ** (n - m) * part.evaluate(values, one=R.one())
    return -base.lam * integrate(base, total)


def I_phi_decomposed(base: Any, phi: InvPoly | Poly) -> Any:
    """``sum_p C^phi_p I_p(base)``; must agree with :func:`I_phi`."""
    if isinstance(phi, Poly):
        phi = InvPoly.from_poly(phi, base.n)
    dec = decompose_invariant(phi)
    total: Any = Fraction(0)
    for part, c in dec.coefficients.items():
        if c:
            total = total + c * I_varsigma(base, part)
    return total


def all_I_varsigma(base: Any) -> dict[Partition, Any]:
    return {p: I_varsigma(base, p) for p in partitions(base.n)}
