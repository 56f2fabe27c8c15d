from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from cliffpin.gaussian import ONE, ZERO, GaussianRational, I, format_exact

from conftest import small_fractions

gaussians = st.builds(GaussianRational, small_fractions, small_fractions)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == ONE


@given(gaussians)
def test_format_parse_round_trip(z):
    assert GaussianRational.parse(format_exact(z)) == z


@given(gaussians)
def test_conjugate_and_norm(z):
    assert (z * z.conjugate()).im == 0
    assert (z * z.conjugate()).re == z.norm2()


def test_rendering_grammar():
    assert format_exact(GaussianRational(Fraction(-1, 2), 3)) == "-1/2+3*i"
    assert format_exact(-I) == "0-1*i"
    assert format_exact(ZERO) == "0"
    assert I * I == -ONE


@pytest.mark.parametrize("bad", [0.5, 1j, "1.5", "i", "1+i"])
def test_inexact_input_rejected(bad):
    with pytest.raises((TypeError, ValueError)):
        GaussianRational.coerce(bad)
