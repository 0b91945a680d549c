from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from confext.scalar import IncompatibleFieldError, Scalar, format_scalar, parse_scalar
from conftest import scalars, surd_fields


@st.composite
def same_field_triple(draw):
    d = draw(surd_fields)
    return d, draw(scalars(d=d)), draw(scalars(d=d)), draw(scalars(d=d))


@given(same_field_triple())
def test_field_axioms(t):
    d, x, y, z = t
    zero, one = Scalar(0), Scalar(1)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + zero == x and x * one == x
    assert x + (-x) == zero
    if x:
        assert x * x.inverse() == one
        assert (y / x) * x == y


@given(scalars())
def test_norm_is_product_with_conjugate(x):
    assert x * x.conjugate() == Scalar(x.norm())


@given(scalars())
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_surd_arithmetic():
    r = parse_scalar("sqrt(19)")
    assert r * r == Scalar(19)
    assert (1 + r) * (1 - r) == Scalar(-18)
    assert Scalar(Fraction(1, 2), 3, 22).d == 22
    assert parse_scalar("-7/3") == Scalar(Fraction(-7, 3))


def test_mixed_fields_rejected():
    with pytest.raises(IncompatibleFieldError):
        Scalar(0, 1, 19) + Scalar(0, 1, 22)


def test_zero_division_and_bad_field():
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()
    with pytest.raises(ValueError):
        Scalar(1, 1, 4)
