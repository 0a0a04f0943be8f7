"""Dense matrices over the rationals with exact Gaussian elimination."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .exact import to_rational


class DimensionError(ValueError):
    pass


class RatMatrix:
    """Immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence[Any]], cols: int | None = None):
        data = tuple(tuple(to_rational(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise DimensionError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatMatrix) and self._data == other._data and self.cols == other.cols

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(x) for x in r] for r in self._data]})"

    def transpose(self) -> RatMatrix:
        return RatMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                         cols=self.rows)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        return RatMatrix(
            [[sum((self._data[i][k] * other._data[k][j] for k in range(self.cols)), Fraction(0))
              for j in range(other.cols)] for i in range(self.rows)],
            cols=other.cols,
        )

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form and the pivot columns."""
        m = [list(r) for r in self._data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            p = next((i for i in range(r, self.rows) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det


class SolveStatus(enum.Enum):
    UNIQUE = "UniqueSolution"
    NONE = "NoSolution"
    NON_UNIQUE = "NonUnique"


@dataclass(frozen=True)
class LinearSolution:
    status: SolveStatus
    values: tuple[Fraction, ...] | None = None
    rank: int = 0

    @property
    def is_unique(self) -> bool:
        return self.status is SolveStatus.UNIQUE


def solve_linear(a: RatMatrix, b: Sequence[Any]) -> LinearSolution:
    """Classify and solve ``a @ x = b`` by comparing ranks of ``a`` and ``[a | b]``.

    For a consistent rank-deficient system, ``values`` holds the particular
    solution with all free variables set to zero.
    """
    b = [to_rational(x) for x in b]
    if len(b) != a.rows:
        raise DimensionError(f"right-hand side has {len(b)} entries, matrix has {a.rows} rows")
    aug = RatMatrix([list(a.row(i)) + [b[i]] for i in range(a.rows)], cols=a.cols + 1)
    m, pivots = aug.rref()
    if a.cols in pivots:
        return LinearSolution(SolveStatus.NONE, None, len(pivots) - 1)
    x = [Fraction(0)] * a.cols
    for r, c in enumerate(pivots):
        x[c] = m[r][a.cols]
    status = SolveStatus.UNIQUE if len(pivots) == a.cols else SolveStatus.NON_UNIQUE
    return LinearSolution(status, tuple(x), len(pivots))
