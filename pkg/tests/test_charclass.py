import json
import random
from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chern_cr.charclass import (
    BaseDataError,
    ChVector,
    KEBase,
    bochner_ch,
    ch_to_chern,
    chern_to_ch,
    cohomology_ring,
    integrate,
    twist_ch,
)
from chern_cr.exact import PolyRing
from chern_cr.invariants import complete_intersection_base

small = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def test_newton_low_degree():
    R = PolyRing([("a1", 1), ("a2", 2), ("a3", 3)])
    a1, a2, a3 = R.gens()
    c = ch_to_chern(ChVector((Fraction(3), a1, a2, a3)))
    assert c[0] == 1
    assert c[1] == a1
    assert c[2] == (a1**2 - a2.scale(2)).scale(Fraction(1, 2))
    assert c[3] == (a1**3 - (a1 * a2).scale(6) + a3.scale(12)).scale(Fraction(1, 6))
    back = chern_to_ch([Fraction(1), a1])
    assert back[1] == a1
    back2 = chern_to_ch([Fraction(1), a1, a2])
    assert back2[2] == (a1**2 - a2.scale(2)).scale(Fraction(1, 2))


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=8))
def test_newton_against_chern_roots(roots):
    # independent oracle: ch_k = sum r^k / k!, c_k = e_k(r)
    x = sympy.symbols("x")
    gen = sympy.Poly(sympy.prod([1 + sympy.Rational(r.numerator, r.denominator) * x for r in roots]), x)
    e = [Fraction(str(gen.coeff_monomial(x**k))) for k in range(len(roots) + 1)]
    ch = [Fraction(len(roots))] + [sum(r**k for r in roots) / factorial(k) for k in range(1, 9)]
    c = ch_to_chern(ChVector(tuple(ch)))
    assert c[: len(e)] == e
    assert all(ck == 0 for ck in c[len(e):])
    assert list(chern_to_ch(e + [0] * (8 - len(roots)), rank=len(roots)).entries) == ch


@settings(max_examples=50, deadline=None)
@given(st.lists(small, min_size=8, max_size=8), st.integers(0, 8))
def test_round_trip_order_8(cs, rank):
    c = [Fraction(1)] + cs
    ch = chern_to_ch(c, rank=rank)
    assert ch_to_chern(ch) == c
    assert chern_to_ch(ch_to_chern(ch), rank=rank) == ch


def test_twist_examples():
    v = ChVector((Fraction(2), Fraction(1), Fraction(-3), Fraction(5, 2)))
    assert twist_ch(v, Fraction(0)) == v
    trivial = ChVector((Fraction(1),) + (Fraction(0),) * 5)
    assert list(twist_ch(trivial, Fraction(1)).entries) == [Fraction(1, factorial(k)) for k in range(6)]


@settings(max_examples=50, deadline=None)
@given(st.lists(small, min_size=6, max_size=6), st.integers(0, 5), small, small)
def test_twist_group_law(rest, rank, t, u):
    v = ChVector((Fraction(rank),) + tuple(rest))
    assert twist_ch(twist_ch(v, t), u) == twist_ch(v, t + u)
    assert twist_ch(twist_ch(v, t), -t) == v


def test_twist_symbolic_group_law():
    R = PolyRing([("h", 1)] + [(f"a{k}", k) for k in range(1, 5)])
    h = R.gen("h")
    v = ChVector((Fraction(3),) + R.gens()[1:])
    t, u = h.scale(Fraction(2, 3)), h.scale(-5)
    assert twist_ch(twist_ch(v, t), u) == twist_ch(v, t + u)


def _cpn_table(n):
    """ch(T CP^n + C) = (n+1) e^h, x = c1(O(-1)) = -h, int h^n = 1."""
    R = cohomology_ring(n)
    table = {}
    for m in R.monomials_of_degree(n):
        v = Fraction((-1) ** m[0])
        for j, b in enumerate(m[1:], start=1):
            v *= Fraction(n + 1, factorial(j)) ** b
        table[m] = v
    return table


@pytest.mark.parametrize("n", range(1, 7))
def test_projective_space_table(n):
    base = complete_intersection_base(n, (1,) * n)
    assert dict(base.table.numbers) == _cpn_table(n)
    assert base.lam == 1


def test_cp2_bochner_flat():
    base = complete_intersection_base(2, (1, 1))
    assert integrate(base, bochner_ch(base, 2)) == 0
    assert bochner_ch(base, 0) == base.ring.constant(3)


def test_bochner_degree_range():
    base = complete_intersection_base(2, (1, 1))
    with pytest.raises(ValueError):
        bochner_ch(base, 3)


def _random_bases(rng, count, max_n=4):
    for _ in range(count):
        n = rng.randint(1, max_n)
        yield complete_intersection_base(n, tuple(rng.randint(1, 6) for _ in range(n)))


def test_first_bochner_class_integrates_to_zero(rng):
    for base in _random_bases(rng, 40, max_n=5):
        b1 = bochner_ch(base, 1)
        for m in base.ring.monomials_of_degree(base.n - 1):
            assert integrate(base, b1 * base.ring.monomial(m)) == 0


def test_integrate_examples():
    curve = complete_intersection_base(1, (4,))
    x = curve.ring.gen("x")
    assert integrate(curve, x) == -4
    assert integrate(curve, curve.ring.zero()) == 0
    plane = complete_intersection_base(2, (1, 1))
    assert integrate(plane, plane.ring.gen("x") ** 2) == 1


def test_integrate_rejects_wrong_degree():
    plane = complete_intersection_base(2, (1, 1))
    with pytest.raises(ValueError):
        integrate(plane, plane.ring.gen("x"))


def test_integrate_missing_entry():
    plane = complete_intersection_base(2, (1, 1))
    data = plane.to_json()
    del data["numbers"]["t2^1"]
    broken = KEBase.from_json(data)
    with pytest.raises(BaseDataError):
        integrate(broken, broken.ring.gen("t2"))


def test_integrate_linear(rng):
    for base in _random_bases(rng, 10):
        R = base.ring
        monos = R.monomials_of_degree(base.n)
        u = sum((R.monomial(m, Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for m in monos), R.zero())
        v = sum((R.monomial(m, Fraction(rng.randint(-9, 9))) for m in monos), R.zero())
        a, b = Fraction(rng.randint(-5, 5), 3), Fraction(rng.randint(-5, 5), 7)
        assert integrate(base, u.scale(a) + v.scale(b)) == a * integrate(base, u) + b * integrate(base, v)


def test_json_round_trip():
    base = complete_intersection_base(2, (1, 1))
    data = base.to_json()
    assert data == {"n": 2, "lambda": "1",
                    "numbers": {"x^2": "1", "x^1*t1^1": "-3", "t1^2": "9", "t2^1": "3/2"}}
    again = KEBase.from_json(json.dumps(data))
    assert again.table == base.table and again.lam == base.lam


@pytest.mark.parametrize("key", ["x2", "t1^1*x^1", "t3^1", "y^2", "x^1*x^1"])
def test_bad_keys(key):
    with pytest.raises(BaseDataError):
        KEBase.from_json({"n": 2, "lambda": "1", "numbers": {key: "1"}})


def test_float_lambda_rejected():
    with pytest.raises(BaseDataError):
        KEBase.from_json({"n": 1, "lambda": 0.5, "numbers": {"x^1": "1", "t1^1": "1"}})
