from fractions import Fraction
from itertools import product

import pytest
import sympy

from chern_cr.symfunc import (
    Partition,
    nu_k,
    p_varsigma,
    partitions,
    power_sum_ring,
    transition_matrix,
)


def _brute_partitions(n):
    ranges = [range(n // k + 1) for k in range(1, n + 1)]
    return {p for p in product(*ranges) if sum(k * m for k, m in enumerate(p, 1)) == n}


def test_small_partition_lists():
    assert [p.parts for p in partitions(1)] == [(1,)]
    assert [p.parts for p in partitions(2)] == [(2, 0), (0, 1)]
    assert len(partitions(4)) == 5
    with pytest.raises(ValueError):
        partitions(0)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)])
def test_partition_counts_and_order(n, count):
    parts = partitions(n)
    assert len(parts) == count
    assert {p.parts for p in parts} == _brute_partitions(n)
    assert [p.parts for p in parts] == sorted((p.parts for p in parts), reverse=True)


def test_partition_validation_and_format():
    assert str(Partition((1, 1, 0))) == "1,1,0"
    assert Partition.parse("1,1,0") == Partition((1, 1, 0))
    with pytest.raises(ValueError):
        Partition((1, 1))
    with pytest.raises(ValueError):
        Partition.parse("2,1,0")


def _sympy_spoly(n, expr_fn):
    """Build a power-sum expression with sympy symbols and return {exponents: coeff}."""
    s = sympy.symbols(f"s1:{n + 1}")
    expr = sympy.expand(expr_fn(s))
    poly = sympy.Poly(expr, *s)
    return {m: Fraction(str(c)) for m, c in zip(poly.monoms(), poly.coeffs())}


def _nu_oracle(n, k):
    def f(s):
        total = s[0] ** k / ((n + 1) ** (k - 1) * sympy.factorial(k))
        for j in range(1, k + 1):
            total -= s[0] ** (k - j) * s[j - 1] / ((n + 1) ** (k - j) * sympy.factorial(k - j))
        return total
    return _sympy_spoly(n, f)


def test_nu_examples():
    R = power_sum_ring(2)
    s1, s2 = R.gens()
    assert nu_k(2, 2) == -(s1**2).scale(Fraction(1, 6)) - s2
    R3 = power_sum_ring(3)
    t1, t2, _ = R3.gens()
    assert nu_k(3, 2) == -(t1**2).scale(Fraction(1, 8)) - t2
    with pytest.raises(ValueError):
        nu_k(3, 1)
    with pytest.raises(ValueError):
        nu_k(3, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_nu_matches_sympy_and_is_homogeneous(n):
    for k in range(2, n + 1):
        nu = nu_k(n, k)
        assert nu.terms == _nu_oracle(n, k)
        assert nu.homogeneous_part(k) == nu


def test_p_varsigma_examples():
    s1, s2 = power_sum_ring(2).gens()
    assert p_varsigma(2, Partition((2, 0))) == (s1**2).scale(Fraction(1, 9))
    assert p_varsigma(2, Partition((0, 1))) == -(s1**2).scale(Fraction(1, 6)) - s2
    assert p_varsigma(1, Partition((1,))) == power_sum_ring(1).gen("s1").scale(Fraction(1, 2))
    with pytest.raises(ValueError):
        p_varsigma(3, Partition((2, 0)))


@pytest.mark.parametrize("n", range(1, 7))
def test_p_varsigma_homogeneous(n):
    for p in partitions(n):
        q = p_varsigma(n, p)
        assert q.homogeneous_part(n) == q


def test_transition_matrix_small():
    m1, d1 = transition_matrix(1)
    assert m1.tolist() == [[Fraction(1, 2)]] and d1 == Fraction(1, 2)
    m2, d2 = transition_matrix(2)
    assert m2.tolist() == [[Fraction(1, 9), 0], [Fraction(-1, 6), -1]]
    assert d2 == Fraction(-1, 9)


@pytest.mark.parametrize("n", range(1, 7))
def test_transition_matrix_invertible(n):
    m, det = transition_matrix(n)
    ref = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.tolist()])
    assert det == Fraction(str(ref.det()))
    assert det != 0
