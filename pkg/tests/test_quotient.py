import hypothesis.strategies as st
import pytest
from hypothesis import given

from cliffpin.algebra import Multivector, Signature, signatures, volume_element
from cliffpin.automorphisms import AutoKind, auto_composition_table, grade_sign
from cliffpin.errors import DimensionError, FieldError
from cliffpin.groups import GroupId
from cliffpin.quotient import (
    classify_odd,
    closed_under_composition,
    coset_check,
    decompose_odd,
    epsilon_map,
    is_multiplicative,
    kernel_report,
    low_dim_pin_annotation,
    predicted_transfer,
    quotient_signature,
    structure_label,
    transfer_test,
)

from conftest import multivectors

COMPLEX_ODD = [Signature(n, 0, "complex") for n in (3, 5, 7)]
REAL_ODD = [s for n in (3, 5, 7) for s in signatures(n) if volume_element(s).omega_sq == 1]


def _grade_oracle(kind, n):
    """An automorphism passes to the quotient iff it acts with the same sign on
    grades k and n - k, since the map identifies those two grades."""
    return all(grade_sign(kind, k) == grade_sign(kind, n - k) for k in range(n + 1))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_predicted_transfer_matches_grade_oracle(n):
    for kind in AutoKind:
        assert predicted_transfer(kind, n) == _grade_oracle(kind, n)


@pytest.mark.parametrize("sig", COMPLEX_ODD + REAL_ODD, ids=str)
def test_transfer_tests_agree(sig):
    for kind in AutoKind:
        t = transfer_test(kind, sig)
        assert t.intrinsic == t.kernel_preserved == _grade_oracle(kind, sig.n)


@pytest.mark.parametrize("sig", COMPLEX_ODD[:2] + REAL_ODD[:4], ids=str)
def test_epsilon_multiplicative(sig):
    assert is_multiplicative(sig)
    assert is_multiplicative(sig, -1)


@pytest.mark.parametrize("sig", COMPLEX_ODD + REAL_ODD, ids=str)
def test_kernel(sig):
    kr = kernel_report(sig)
    assert kr.ok
    assert kr.kernel_rank == kr.quotient_rank == 2 ** (sig.n - 1)


@given(st.data())
def test_epsilon_multiplicative_random(data):
    sig = data.draw(st.sampled_from([Signature(5, 0, "complex"), Signature(4, 1, "complex"), Signature(0, 3)]))
    x, y = data.draw(multivectors(sig, 5)), data.draw(multivectors(sig, 5))
    assert epsilon_map(x * y) == epsilon_map(x) * epsilon_map(y)


def test_epsilon_on_low_blades():
    sig = Signature(3, 0, "complex")
    eps = epsilon_map(Multivector.e(sig, 2, 3))
    q = quotient_signature(sig)
    assert eps == Multivector.e(q, 1).scale("0-1*i")


def test_real_field_error():
    with pytest.raises(FieldError):
        classify_odd(Signature(3, 0))  # omega^2 = -1 under plus_first
    with pytest.raises(DimensionError):
        classify_odd(Signature(2, 0))


@pytest.mark.parametrize("sig", COMPLEX_ODD + [Signature(9, 0, "complex")], ids=str)
def test_complex_quotient(sig):
    rep = classify_odd(sig)
    assert rep.tests_agree and rep.kernel.ok
    if sig.n % 4 == 1:
        assert rep.quotient_kind == "Pin_b"
    else:
        assert rep.quotient_kind == "Pin_c"
    assert rep.forms_group
    assert rep.double_cover is GroupId.Z2xZ2


def test_real_quotient_can_be_z4():
    rep = classify_odd(Signature(0, 3))
    assert rep.quotient_kind == "Pin_c" and rep.double_cover is GroupId.Z4


def test_rev_revstar_not_closed():
    table = auto_composition_table()
    assert table[(AutoKind.REV, AutoKind.REVSTAR)] is AutoKind.STAR
    assert not closed_under_composition([AutoKind.ID, AutoKind.REV, AutoKind.REVSTAR])
    assert closed_under_composition([AutoKind.ID, AutoKind.REV])


@pytest.mark.parametrize("sig", COMPLEX_ODD + REAL_ODD[:3], ids=str)
def test_decomposition(sig):
    dec = decompose_odd(sig)
    assert dec.idempotent and dec.annihilating and dec.complete and dec.central
    assert dec.ok


@pytest.mark.parametrize("sig", [Signature(3, 0, "complex"), Signature(0, 3), Signature(1, 4)], ids=str)
def test_coset(sig):
    assert coset_check(sig)


def test_structure_and_annotations():
    assert structure_label(Signature(0, 3)) == "Cl(0,3) ≅ Cl(0,2) ⊕ Cl(0,2)"
    assert structure_label(Signature(3, 0)) == "Cl(3,0) ≅ C_2"
    name, ok = low_dim_pin_annotation(Signature(3, 0))
    assert name == "Pin(3,0) ≅ SU(2) ∪ iSU(2)" and ok
    assert low_dim_pin_annotation(Signature(3, 0, sign_rule="minus_first"))[1] is False
    assert low_dim_pin_annotation(Signature(2, 1)) is None
