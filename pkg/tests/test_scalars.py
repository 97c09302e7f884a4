from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie import Field
from homlie.errors import DivisionByZero, FieldMismatch, ParseError

Q = Field.rationals()
PRIMES = (2, 3, 5, 7, 101)


def test_rational_addition():
    assert Q(1, 2) + Q(1, 3) == Q(5, 6)
    assert str(Q(1, 2) + Q(1, 3)) == "5/6"


def test_gf3_inverse():
    f = Field.prime(3)
    assert f(2).inv() == f(2)
    with pytest.raises(DivisionByZero):
        f(0).inv()
    with pytest.raises(ZeroDivisionError):
        Q(1) / Q(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Field.prime(3)(1) + Field.prime(5)(1)
    with pytest.raises(FieldMismatch):
        Q(1) * Field.prime(2)(1)


def test_non_prime_modulus_rejected():
    for n in (0, 1, 4, 9, 91):
        with pytest.raises(ValueError):
            Field.prime(n)


def test_field_flags():
    assert Field.parse("Q") == Q
    assert Field.parse("p=5") == Field.prime(5)
    assert Field.prime(5).flag == "p=5"
    assert str(Field.prime(5)) == "GF(5)"
    for bad in ("R", "p=4", "p=", "5"):
        with pytest.raises(ParseError):
            Field.parse(bad)


def test_literals():
    assert Q.parse_raw("-3/6") == Fraction(-1, 2)
    assert Field.prime(5).parse_raw("7") == 2
    assert Field.prime(5).parse_raw("-1") == 4
    for bad in ("1/0", "x", "1.5"):
        with pytest.raises(ParseError):
            Q.parse_raw(bad)
    with pytest.raises(ParseError):
        Field.prime(5).parse_raw("1/2")


def test_canonical_storage():
    a, b = Q(2, 4), Q(-1, -2)
    assert a.value == b.value == Fraction(1, 2)
    assert a.value.denominator > 0
    f = Field.prime(7)
    assert f(-1).value == 6
    assert f(15).value == 1
    assert hash(f(8)) == hash(f(1))


def _values(field):
    if field.kind == "Q":
        return st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**6))
    return st.integers(-10**6, 10**6)


@st.composite
def field_triples(draw):
    fld = draw(st.sampled_from([Q] + [Field.prime(p) for p in PRIMES]))
    vals = _values(fld)
    return fld, fld(draw(vals)), fld(draw(vals)), fld(draw(vals))


@settings(max_examples=1000, deadline=None)
@given(field_triples())
def test_field_axioms(t):
    fld, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + fld.zero == a and a * fld.one == a
    assert a + (-a) == fld.zero
    assert a - b == a + (-b)
    if not a.is_zero():
        assert a * a.inv() == fld.one
        assert b / a * a == b


@settings(max_examples=300, deadline=None)
@given(field_triples())
def test_equality_is_representation_equality(t):
    _, a, b, _ = t
    assert (a == b) == (a.value == b.value)
