import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

from cliffpin.algebra import (
    Multivector,
    Signature,
    blade_product,
    center_basis,
    epsilon_omega,
    grade_parts,
    signatures,
    volume_element,
)
from cliffpin.errors import FieldError, SignatureMismatch

from conftest import multivectors, signatures_upto

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]])
_Z = np.diag([1, -1]).astype(complex)
_1 = np.eye(2, dtype=complex)


def _jordan_wigner(sig):
    """Numeric generators built from Pauli strings, independent of the bitmask
    sign rule. Generators with negative square pick up a factor i."""
    k = (sig.n + 1) // 2
    gens = []
    for idx in range(sig.n):
        j, which = divmod(idx, 2)
        factors = [_Z] * j + [_X if which == 0 else _Y] + [_1] * (k - j - 1)
        g = factors[0]
        for f in factors[1:]:
            g = np.kron(g, f)
        gens.append(g if sig.square(idx + 1) == 1 else 1j * g)
    return gens


def _blade_matrix(mask, gens):
    out = np.eye(gens[0].shape[0], dtype=complex)
    for i, g in enumerate(gens):
        if (mask >> i) & 1:
            out = out @ g
    return out


@pytest.mark.parametrize("sig", [s for n in range(1, 7) for rule in ("plus_first", "minus_first") for s in signatures(n, "real", rule)], ids=str)
def test_blade_product_matches_matrix_oracle(sig):
    gens = _jordan_wigner(sig)
    mats = [_blade_matrix(m, gens) for m in range(sig.dim)]
    for a in range(sig.dim):
        for b in range(sig.dim):
            s, c = blade_product(a, b, sig)
            assert c == a ^ b
            assert np.array_equal(mats[a] @ mats[b], s * mats[c])


@pytest.mark.parametrize("n", range(1, 10))
def test_omega_square_closed_form(n):
    for rule in ("plus_first", "minus_first"):
        for sig in signatures(n, "real", rule):
            neg = sig.squares.count(-1)
            assert volume_element(sig).omega_sq == (-1) ** (n * (n - 1) // 2 + neg)


def test_omega_square_even_table():
    # p - q = 2, 6 (mod 8) gives -1; 0, 4 gives +1
    assert volume_element(Signature(2, 0)).omega_sq == -1
    assert volume_element(Signature(1, 3)).omega_sq == -1
    assert volume_element(Signature(4, 0)).omega_sq == 1
    assert volume_element(Signature(1, 1)).omega_sq == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_center(n):
    for sig in signatures(n):
        masks = sorted(next(iter(c.terms)) for c in center_basis(sig))
        assert masks == ([0] if n % 2 == 0 else [0, sig.dim - 1])


def test_epsilon_omega_squares_to_one():
    for sig in (Signature(3, 0, "complex"), Signature(0, 3), Signature(4, 1, "complex")):
        eo = epsilon_omega(sig)
        assert eo * eo == Multivector.scalar(sig, 1)


def test_real_algebra_rejects_imaginary_coefficients():
    with pytest.raises(FieldError):
        Multivector(Signature(2, 0), {1: "0+1*i"})


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        Multivector.e(Signature(2, 0), 1) * Multivector.e(Signature(1, 1), 1)


def test_rendering():
    sig = Signature(2, 0)
    x = (Multivector.scalar(sig, 1) - Multivector.e(sig, 1, 2)).scale("1/2")
    assert str(x) == "1/2 - 1/2*e12"


@given(st.data())
def test_ring_laws(data):
    sig = data.draw(signatures_upto(5))
    x, y, z = (data.draw(multivectors(sig)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(st.data())
def test_grade_parts_reassemble(data):
    sig = data.draw(signatures_upto(6))
    x = data.draw(multivectors(sig, 6))
    parts = grade_parts(x)
    assert parts.even + parts.odd == x
    total = Multivector.zero(sig)
    for g in parts.by_grade:
        total = total + g
    assert total == x
