import hypothesis.strategies as st
import pytest
from hypothesis import given

from cliffpin.algebra import Multivector, Signature, signatures
from cliffpin.automorphisms import (
    AutoKind,
    apply_auto,
    auto_composition_table,
    grade_sign,
    inverse,
    membership,
    norm,
    rev,
    revstar,
    star,
    star_via_omega,
)
from cliffpin.errors import DimensionError
from cliffpin.reference import AUTO_TABLE

from conftest import multivectors, signatures_upto

SMALL = [s for n in range(1, 7) for s in signatures(n)]


def test_composition_table():
    table = auto_composition_table()
    assert {(f.value, g.value): h.value for (f, g), h in table.items()} == AUTO_TABLE
    for f in AutoKind:
        for g in AutoKind:
            assert f.compose(g) is table[(f, g)]


def test_composition_table_is_pointwise():
    # same table recomputed on actual elements of Cl(2,1)
    sig = Signature(2, 1)
    assert auto_composition_table(sig) == auto_composition_table()


@pytest.mark.parametrize("k", range(0, 12))
def test_grade_sign_periodicity(k):
    assert grade_sign(AutoKind.REV, k) == [1, 1, -1, -1][k % 4]
    assert grade_sign(AutoKind.REVSTAR, k) == [1, -1, -1, 1][k % 4]
    assert grade_sign(AutoKind.STAR, k) == (-1) ** k


def _explicit_reverse(mask, sig):
    out = Multivector.scalar(sig, 1)
    for i in sorted((i + 1 for i in range(sig.n) if (mask >> i) & 1), reverse=True):
        out = out * Multivector.e(sig, i)
    return out


@pytest.mark.parametrize("sig", SMALL, ids=str)
def test_sign_laws_exhaustive(sig):
    for mask in range(sig.dim):
        x = Multivector.blade(sig, mask)
        assert rev(x) == _explicit_reverse(mask, sig)
        minus = Multivector.scalar(sig, 1)
        for i in range(sig.n):
            if (mask >> i) & 1:
                minus = minus * -Multivector.e(sig, i + 1)
        assert star(x) == minus
        assert revstar(x) == star(rev(x)) == rev(star(x))


@pytest.mark.parametrize("sig", [s for s in SMALL if s.n <= 5], ids=str)
def test_hom_and_antihom_exhaustive(sig):
    blades = [Multivector.blade(sig, m) for m in range(sig.dim)]
    for a in blades:
        for b in blades:
            assert rev(a * b) == rev(b) * rev(a)
            assert star(a * b) == star(a) * star(b)
            assert revstar(a * b) == revstar(b) * revstar(a)


@pytest.mark.parametrize("sig", [s for s in SMALL if s.n % 2 == 0], ids=str)
def test_star_is_conjugation_by_omega(sig):
    for mask in range(sig.dim):
        x = Multivector.blade(sig, mask)
        assert star_via_omega(x) == star(x)


def test_star_via_omega_rejects_odd_n():
    with pytest.raises(DimensionError):
        star_via_omega(Multivector.e(Signature(3, 0), 1))


@given(st.data())
def test_antihomomorphism_random(data):
    sig = data.draw(signatures_upto(5))
    x, y = data.draw(multivectors(sig)), data.draw(multivectors(sig))
    for kind in AutoKind:
        lhs = apply_auto(kind, x * y)
        rhs = apply_auto(kind, y) * apply_auto(kind, x) if kind.is_anti else apply_auto(kind, x) * apply_auto(kind, y)
        assert lhs == rhs
        assert apply_auto(kind, apply_auto(kind, x)) == x


@given(st.data())
def test_norm_of_vectors_is_scalar(data):
    sig = data.draw(signatures_upto(5))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=sig.n, max_size=sig.n))
    v = Multivector(sig, {1 << i: c for i, c in enumerate(coeffs)})
    assert norm(v).is_scalar()
    assert norm(v) == v * v


def test_inverse_and_membership():
    sig = Signature(2, 1)
    e1, e3 = Multivector.e(sig, 1), Multivector.e(sig, 3)
    assert inverse(e1 + e3) is None  # null vector
    x = Multivector.e(sig, 1, 2)
    assert x * inverse(x) == 1
    m = membership(x)
    assert m.in_spin and m.norm_value == 1
    # e3 has N = -1: in Pin, odd, not in Spin
    m3 = membership(e3)
    assert m3.in_pin and not m3.in_spin and m3.norm_value == -1
    assert not membership(e1 + e3).in_lipschitz
