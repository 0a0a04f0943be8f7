from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chern_cr.linalg import DimensionError, RatMatrix, SolveStatus, solve_linear


def test_identity_solve():
    sol = solve_linear(RatMatrix.identity(2), [Fraction(1, 2), -3])
    assert sol.status is SolveStatus.UNIQUE
    assert sol.values == (Fraction(1, 2), Fraction(-3))


def test_inconsistent():
    assert solve_linear(RatMatrix([[1, 1], [2, 2]]), [1, 3]).status is SolveStatus.NONE


def test_rank_deficient_consistent():
    sol = solve_linear(RatMatrix([[1, 1], [2, 2]]), [1, 2])
    assert sol.status is SolveStatus.NON_UNIQUE
    assert sol.rank == 1


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear(RatMatrix.identity(2), [1, 2, 3])
    with pytest.raises(DimensionError):
        RatMatrix([[1, 2], [3]])


small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_and_rank_match_sympy(rows):
    m = RatMatrix(rows)
    ref = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    assert m.det() == Fraction(str(ref.det()))
    assert m.rank() == ref.rank()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_determinant(rows):
    m = RatMatrix(rows)
    n = m.rows
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        sol = solve_linear(m, e)
        if not sol.is_unique:
            assert m.det() == 0
            return
        cols.append(sol.values)
    inv = RatMatrix(cols).transpose()
    assert m @ inv == RatMatrix.identity(n)
    assert m.det() * inv.det() == 1
