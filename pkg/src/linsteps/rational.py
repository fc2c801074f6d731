"""Exact rational scalars.

Arithmetic is delegated to ``fractions.Fraction``, which already stores every
value in canonical form: positive denominator, gcd-reduced, zero as 0/1.
The helpers here exist to give the engine a single parsing/formatting point
and error codes instead of bare ValueErrors.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ParseError, ZeroDenominator

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational_from(num: int, den: int = 1) -> Fraction:
    """Build num/den in canonical form; den must be nonzero."""
    if den == 0:
        raise ZeroDenominator(f"denominator of {num}/{den} must be nonzero")
    return Fraction(num, den)


def rational_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rational_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rational_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rational_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise DivisionByZero(f"cannot divide {a} by zero")
    return a / b


def parse_rational(text) -> Fraction:
    """Parse "p", "p/q" or a decimal literal ("0.25") exactly.

    Integers are accepted as-is for convenience.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational literal, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ZeroDenominator(f"denominator of {text!r} is zero") from None
    except ValueError:
        raise ParseError(f"not a rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p" or "p/q" with q > 0."""
    return str(value)
