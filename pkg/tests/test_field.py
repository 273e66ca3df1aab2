from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewrank.errors import DivisionByZero, FieldMismatch, ParseError
from skewrank.field import Q, FieldSpec, Scalar, from_integer, inv, neg, parse_field

from conftest import GF2, GF3, GF5


def test_from_integer_examples():
    assert from_integer(-1, GF3).value == 2
    assert from_integer(0, Q).value == Fraction(0, 1)
    assert from_integer(-1, GF2).value == 1


def test_arith_examples():
    assert inv(from_integer(2, GF5)).value == 3
    assert (Scalar(Fraction(1, 2), Q) + Scalar(Fraction(1, 3), Q)).value == Fraction(5, 6)
    assert neg(from_integer(1, GF2)).value == 1


def test_errors():
    with pytest.raises(DivisionByZero):
        from_integer(0, GF5).inverse()
    with pytest.raises(ZeroDivisionError):
        Scalar(1, Q) / Scalar(0, Q)
    with pytest.raises(FieldMismatch):
        from_integer(1, GF3) + from_integer(1, GF5)
    with pytest.raises(FieldMismatch):
        Scalar(Fraction(1, 2), GF5)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2**31 - 1 + 2, 2**31])
def test_rejects_bad_moduli(p):
    with pytest.raises(ValueError):
        FieldSpec.gf(p)


def test_accepts_large_prime():
    assert FieldSpec.gf(2**31 - 1).p == 2**31 - 1


def test_parse_field():
    assert parse_field("q") == Q
    assert parse_field("gf 5") == GF5
    assert parse_field("GF3") == GF3
    with pytest.raises(ParseError):
        parse_field("gf 6")
    with pytest.raises(ParseError):
        parse_field("reals")


def test_canonical_equality_is_structural():
    assert Scalar(7, GF5) == Scalar(2, GF5)
    assert Scalar(Fraction(2, 4), Q) == Scalar(Fraction(1, 2), Q)
    assert Scalar(-1, GF3) != Scalar(-1, GF5)


fields = st.sampled_from([Q, GF2, GF3, GF5, FieldSpec.gf(101)])
ints = st.integers(-100, 100)


@given(fields, ints, ints, ints)
def test_field_axioms(f, x, y, z):
    a, b, c = (Scalar(v, f) for v in (x, y, z))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Scalar(0, f)
    if not a.is_zero():
        assert a * a.inverse() == Scalar(1, f)
        assert (b / a) * a == b


@given(fields, ints, ints)
def test_from_integer_is_ring_homomorphism(f, m, n):
    assert from_integer(m * n, f) == from_integer(m, f) * from_integer(n, f)
    assert from_integer(m + n, f) == from_integer(m, f) + from_integer(n, f)
