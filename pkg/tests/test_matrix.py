from fractions import Fraction

import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given

from cliffpin.gaussian import GaussianRational, I
from cliffpin.matrix import Matrix, commute_sign, rank, solve

entries = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def matrices(draw, d=None):
    d = d or draw(st.integers(1, 4))
    return Matrix([[draw(entries) for _ in range(d)] for _ in range(d)])


def _sympy(m: Matrix):
    return sympy.Matrix([[sympy.Rational(v.re) + sympy.I * sympy.Rational(v.im) for v in row] for row in m.rows()])


@given(st.data())
def test_product_matches_sympy(data):
    d = data.draw(st.integers(1, 4))
    a, b = data.draw(matrices(d)), data.draw(matrices(d))
    assert _sympy(a @ b) == (_sympy(a) * _sympy(b)).expand()


@given(st.lists(st.lists(st.integers(-2, 2), min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=5))
def test_complex_rank_matches_sympy(rows):
    sm = sympy.Matrix([[sympy.Rational(v.re) + sympy.I * sympy.Rational(v.im) for v in r] for r in rows])
    assert rank(rows) == sm.rank(simplify=True)


@given(st.data())
def test_inverse_and_transpose(data):
    d = data.draw(st.integers(1, 4))
    a, b = data.draw(matrices(d)), data.draw(matrices(d))
    assert (a @ b).T == b.T @ a.T
    assert (a @ b).H == b.H @ a.H
    if rank(a.rows()) == d:
        assert a @ a.inverse() == Matrix.identity(d)
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


def test_fraction_entries_normalized():
    m = Matrix([[Fraction(1, 2), 0], [0, Fraction(2, 4)]])
    assert m == Matrix.identity(2) * Fraction(1, 2)
    assert m.to_strings() == [["1/2", "0"], ["0", "1/2"]]


def test_commute_sign():
    x = Matrix([[0, 1], [1, 0]])
    z = Matrix([[1, 0], [0, -1]])
    assert commute_sign(x, z) == -1
    assert commute_sign(x, x) == 1
    assert commute_sign(x, Matrix([[1, 1], [0, 1]])) == 0


def test_solve_singular():
    assert solve([[1, 2], [2, 4]], [1, 2]) is None
    assert solve([[0, 1], [1, 0]], [I, 3]) == [GaussianRational(3), I]


def test_rejects_floats():
    with pytest.raises(TypeError):
        Matrix([[0.5]])
