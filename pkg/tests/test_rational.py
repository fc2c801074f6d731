from fractions import Fraction

import pytest
from hypothesis import given

from linsteps import (DivisionByZero, ParseError, ZeroDenominator,
                      format_rational, parse_rational, rational_add,
                      rational_div, rational_from, rational_mul, rational_sub)

from conftest import small_rationals


def test_gcd_reduction():
    assert rational_from(2, 4) == Fraction(1, 2)


def test_sign_normalization():
    r = rational_from(3, -6)
    assert r == Fraction(-1, 2)
    assert r.denominator == 2 and r.numerator == -1


def test_zero_canonical_form():
    r = rational_from(0, 7)
    assert r.numerator == 0 and r.denominator == 1


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        rational_from(1, 0)


def test_field_ops():
    assert rational_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rational_mul(Fraction(2, 3), Fraction(3, 2)) == 1
    assert rational_sub(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)
    assert rational_div(Fraction(1, 2), Fraction(2)) == Fraction(1, 4)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        rational_div(Fraction(1), Fraction(0))


@pytest.mark.parametrize("text,expected", [
    ("3", Fraction(3)),
    ("-3", Fraction(-3)),
    ("1/2", Fraction(1, 2)),
    ("-7/3", Fraction(-7, 3)),
    ("0.25", Fraction(1, 4)),
    ("-0.5", Fraction(-1, 2)),
    (" 2/6 ", Fraction(1, 3)),
    (5, Fraction(5)),
])
def test_parse_accepts(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1//2", "1.2.3", "2/-3", None, 1.5])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_rational("1/0")


def test_format_round_trips():
    for text in ["1/2", "-3", "0"]:
        assert format_rational(parse_rational(text)) == text


@given(small_rationals, small_rationals, small_rationals)
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(small_rationals)
def test_additive_inverse_and_canonical_form(a):
    assert a + (-a) == 0
    assert a.denominator > 0
    from math import gcd
    assert gcd(abs(a.numerator), a.denominator) == 1
