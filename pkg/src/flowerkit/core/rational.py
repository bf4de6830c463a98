"""Exact rationals: ``fractions.Fraction`` plus strict ``p/q`` parsing.

Decimal and exponent forms are rejected so no value ever passes through a
float on the way in.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError

Rational = Fraction

_RAT = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def parse_rational(text: str) -> Fraction:
    m = _RAT.fullmatch(text)
    if not m:
        raise ParseError(f"expected a rational 'p/q' or integer, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"refusing to convert {type(x).__name__} to an exact rational")


def fmt_rational(x) -> str:
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"
