from fractions import Fraction

import hypothesis.strategies as st
import sympy
from hypothesis import given

from cliffpin.dirac_hestenes import PARAM_NAMES, dirac_hestenes_check
from cliffpin.rep import spacetime_basis

from conftest import small_fractions


def _symbolic_gammas():
    s = [sympy.Matrix([[0, 1], [1, 0]]), sympy.Matrix([[0, -sympy.I], [sympy.I, 0]]), sympy.Matrix([[1, 0], [0, -1]])]
    z, one = sympy.zeros(2), sympy.eye(2)
    g0 = sympy.BlockMatrix([[one, z], [z, -one]]).as_explicit()
    gk = [sympy.BlockMatrix([[z, sk], [-sk, z]]).as_explicit() for sk in s]
    return [g0, *gk]


def test_basis_matches_symbolic_gammas():
    for g, sg in zip(spacetime_basis().gens, _symbolic_gammas()):
        for i in range(4):
            for j in range(4):
                v = g[i, j]
                assert sympy.Rational(v.re) + sympy.I * sympy.Rational(v.im) == sg[i, j]


def test_symbolic_pattern():
    """Phi for symbolic real parameters has the 4x4 block form with
    phi2 = -a13 - i a23, and Gamma0 Phi^dagger Gamma0 the conjugate form."""
    a = sympy.symbols(" ".join(PARAM_NAMES), real=True)
    g = _symbolic_gammas()
    blades = [sympy.eye(4), g[0] * g[1], g[0] * g[2], g[0] * g[3], g[1] * g[2], g[1] * g[3], g[2] * g[3], g[0] * g[1] * g[2] * g[3]]
    phi = sympy.zeros(4)
    for coeff, b in zip(a, blades):
        phi += coeff * b
    a0, a01, a02, a03, a12, a13, a23, a0123 = a
    i = sympy.I
    p1, p2, p3, p4 = a0 - i * a12, -a13 - i * a23, a03 - i * a0123, a01 + i * a02
    c = sympy.conjugate
    want = sympy.Matrix([
        [p1, -c(p2), p3, c(p4)],
        [p2, c(p1), p4, -c(p3)],
        [p3, c(p4), p1, -c(p2)],
        [p4, -c(p3), p2, c(p1)],
    ])
    assert sympy.simplify(phi - want) == sympy.zeros(4)
    conj = g[0] * phi.H * g[0]
    want_conj = sympy.Matrix([
        [c(p1), c(p2), -c(p3), -c(p4)],
        [-p2, p1, -p4, p3],
        [-c(p3), -c(p4), c(p1), c(p2)],
        [-p4, p3, -p2, p1],
    ])
    assert sympy.simplify(conj - want_conj) == sympy.zeros(4)


@given(st.lists(small_fractions, min_size=8, max_size=8))
def test_three_paths_agree(params):
    rep = dirac_hestenes_check(params)
    assert rep.ok, rep
    assert rep.literal_pattern_ok == (params[5] == 0)


def test_literal_sign_of_a13_mismatches():
    params = [0, 0, 0, 0, 0, Fraction(1), 0, 0]
    rep = dirac_hestenes_check(params)
    assert rep.ok and not rep.literal_pattern_ok
