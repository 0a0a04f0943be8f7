"""Invariants over the whole family of complete intersections ``Y_d`` in CP^{2n}.

Every invariant of the circle bundle ``S_d`` has the form ``E * q(s_1, ..., s_n)``
with ``E = d_1 ... d_n`` and ``s_k = (d_1^k + ... + d_n^k)/k!``.  The
computations below run the same pipeline as for a single base, but with
characteristic numbers that are polynomials in the ``s_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Any, Sequence

from .charclass import ChVector, cohomology_ring
from .exact import Poly, PolyRing
from .invariants import I_varsigma, burns_epstein
from .linalg import LinearSolution, RatMatrix, SolveStatus, solve_linear
from .symfunc import Partition, p_varsigma, partitions, power_sum_ring, power_sums

# mu = sum_p C_p I_p for n <= 4, as reported in the literature
KNOWN_RELATIONS: dict[int, dict[str, Fraction]] = {
    1: {"1": Fraction(-1)},
    2: {"2,0": Fraction(1), "0,1": Fraction(-1)},
    3: {"3,0,0": Fraction(-1), "1,1,0": Fraction(1), "0,0,1": Fraction(2)},
    4: {
        "4,0,0,0": Fraction(1),
        "2,1,0,0": Fraction(-1),
        "1,0,1,0": Fraction(-2),
        "0,2,0,0": Fraction(1, 2),
        "0,0,0,1": Fraction(-6),
    },
}


class FamilyBase:
    """Symbolic stand-in for :class:`~chern_cr.charclass.KEBase` over all ``Y_d``.

    Pairings return the coefficient of ``E`` as a polynomial in ``s``.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        self.ring: PolyRing = cohomology_ring(n)
        self.sring: PolyRing = power_sum_ring(n)
        s1 = self.sring.gen("s1")
        self.lam: Poly = (self.sring.constant(2 * n + 1) - s1).scale(Fraction(1, n + 1))
        s = self.sring.gens()
        self._tcoef = [self.sring.constant(Fraction(2 * n + 1, factorial(j))) - s[j - 1]
                       for j in range(1, n + 1)]
        self._cache: dict[tuple[int, ...], Poly] = {}

    def pairing(self, exps: tuple[int, ...]) -> Poly:
        if self.ring.degree_of(exps) != self.n:
            raise ValueError("pairing needs a degree-n monomial")
        if exps not in self._cache:
            value = self.sring.constant((-1) ** exps[0])
            for j, b in enumerate(exps[1:], start=1):
                if b:
                    value = value * self._tcoef[j - 1] ** b
            self._cache[exps] = value
        return self._cache[exps]

    def tangent_plus_trivial(self) -> ChVector:
        R = self.ring
        return ChVector((Fraction(self.n + 1),) + tuple(R.gen(f"t{j}") for j in range(1, self.n + 1)))

    def tangent(self) -> ChVector:
        R = self.ring
        return ChVector((Fraction(self.n),) + tuple(R.gen(f"t{j}") for j in range(1, self.n + 1)))

    def lam_x(self) -> Poly:
        return self.ring.gen("x").scale(self.lam)


@lru_cache(maxsize=None)
def family_base(n: int) -> FamilyBase:
    return FamilyBase(n)


@dataclass(frozen=True)
class FamilyPoly:
    """The invariant ``E * q`` where ``E = d_1 ... d_n``."""

    q: Poly
    n: int

    def specialize(self, d: Sequence[int]) -> Fraction:
        if len(d) != self.n:
            raise ValueError(f"need {self.n} degrees")
        return prod(d) * self.q.evaluate(power_sums(d))

    def __str__(self) -> str:
        factor = "*".join(f"d{i}" for i in range(1, self.n + 1))
        return f"{factor}*({self.q})"


def _as_spoly(value: Any, n: int) -> Poly:
    if isinstance(value, Poly):
        return value
    return power_sum_ring(n).constant(value)


@lru_cache(maxsize=None)
def family_I_varsigma(n: int, part: Partition) -> FamilyPoly:
    if part.n != n:
        raise ValueError(f"{part} is not a partition of {n}")
    return FamilyPoly(_as_spoly(I_varsigma(family_base(n), part), n), n)


@lru_cache(maxsize=None)
def family_mu(n: int) -> FamilyPoly:
    return FamilyPoly(_as_spoly(burns_epstein(family_base(n)), n), n)


@dataclass(frozen=True)
class LeadingTermResult:
    partition: Partition
    top_part: Poly
    expected: Poly

    @property
    def passed(self) -> bool:
        return self.top_part == self.expected


def leading_term_check(n: int) -> list[LeadingTermResult]:
    """Compare the degree-(n+1) part of each ``q_p`` with ``s1/(n+1) * p_varsigma``."""
    s1 = power_sum_ring(n).gen("s1").scale(Fraction(1, n + 1))
    out = []
    for part in partitions(n):
        q = family_I_varsigma(n, part).q
        out.append(LeadingTermResult(part, q.homogeneous_part(n + 1), s1 * p_varsigma(n, part)))
    return out


def _support(polys: Sequence[Poly]) -> list[tuple[int, ...]]:
    ring = polys[0].ring
    monos = set()
    for p in polys:
        monos.update(p.terms)
    return sorted(monos, key=lambda m: (ring.degree_of(m), m), reverse=True)


def q_coefficient_matrix(n: int) -> tuple[RatMatrix, list[tuple[int, ...]]]:
    """Rows: monomials in s occurring in some ``q_p``; columns: partitions of n."""
    qs = [family_I_varsigma(n, p).q for p in partitions(n)]
    monos = _support(qs)
    mat = RatMatrix([[q.coefficient(m) for q in qs] for m in monos], cols=len(qs))
    return mat, monos


@dataclass(frozen=True)
class ConjectureResult:
    n: int
    solution: LinearSolution
    coefficients: dict[Partition, Fraction] | None
    known: dict[Partition, Fraction] | None

    @property
    def status(self) -> SolveStatus:
        return self.solution.status

    @property
    def matches_known(self) -> bool | None:
        if self.known is None or self.coefficients is None:
            return None
        return self.coefficients == self.known


def conjecture_coefficients(n: int) -> ConjectureResult:
    """Solve ``mu = sum_p C_p I_p`` identically in ``s`` (the factor E cancels)."""
    parts = partitions(n)
    qs = [family_I_varsigma(n, p).q for p in parts]
    target = family_mu(n).q
    monos = _support(qs + [target])
    mat = RatMatrix([[q.coefficient(m) for q in qs] for m in monos], cols=len(qs))
    sol = solve_linear(mat, [target.coefficient(m) for m in monos])
    coefficients = dict(zip(parts, sol.values)) if sol.is_unique else None
    known = None
    if n in KNOWN_RELATIONS:
        table = {Partition.parse(k): v for k, v in KNOWN_RELATIONS[n].items()}
        known = {p: table.get(p, Fraction(0)) for p in parts}
    return ConjectureResult(n, sol, coefficients, known)
