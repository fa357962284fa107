"""Exact rational coefficients.

Coefficients are :class:`fractions.Fraction` values, which are always stored
in lowest terms with a positive denominator and arbitrary-precision
numerator/denominator. The helpers here add the text form used by the
parser/printer and an explicit dispatch over the four field operations.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def rat_canonical(n: int, d: int) -> Fraction:
    """Return the canonical fraction ``n/d``; raises ZeroDivisionError if d == 0."""
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(int(n), int(d))


def rat_arith(op: str, a: Fraction, b: Fraction) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    return fn(Fraction(a), Fraction(b))


def rat_inv(a: Fraction) -> Fraction:
    return ONE / a


def is_canonical(a: Fraction) -> bool:
    from math import gcd

    return a.denominator > 0 and gcd(abs(a.numerator), a.denominator) == 1


def parse_rational(text: str) -> Fraction:
    """Parse ``n`` or ``n/d``."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_canonical(num, den)


def format_rational(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
