"""Text grammar for exact scalars.

Rationals are written ``p`` or ``p/q``; quadratic elements ``a+b*sqrt(D)``,
where either part may be absent (``sqrt(5)``, ``-1/2*sqrt(-3)``).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .quadratic import QuadElt


class ParseError(ValueError):
    """A syntax error with a 1-based ``line`` and ``column``."""

    def __init__(self, message: str, text: str = "", pos: int = 0) -> None:
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.pos = pos
        self.line = line
        self.column = column


_RAT = r"\d+(?:/\d+)?"
_SCALAR = re.compile(
    rf"""\s*
    (?P<a>[+-]?\s*{_RAT}(?![\d/]*\s*\*))?     # rational part
    \s*
    (?:
      (?P<sign>[+-])?\s*
      (?:(?P<b>{_RAT})\s*\*\s*)?
      sqrt\(\s*(?P<D>[+-]?\d+)\s*\)
    )?
    \s*$""",
    re.VERBOSE,
)


def _fraction(text: str) -> Fraction:
    return Fraction(text.replace(" ", ""))


def parse_scalar(text: str) -> Fraction | QuadElt:
    """Parse a rational or quadratic element.

    >>> parse_scalar("-1/2+1/2*sqrt(5)")
    QuadElt(-1/2, 1/2, 5)
    >>> parse_scalar("3/6")
    Fraction(1, 2)
    """
    m = _SCALAR.match(text)
    if m is None or (m.group("a") is None and m.group("D") is None):
        stripped = len(text) - len(text.lstrip())
        raise ParseError(f"cannot parse scalar {text.strip()!r}", text, stripped)
    a = _fraction(m.group("a")) if m.group("a") else Fraction(0)
    if m.group("D") is None:
        return a
    if m.group("a") and m.group("sign") is None:
        raise ParseError("missing '+' or '-' before sqrt", text, m.start("D"))
    b = _fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("sign") == "-":
        b = -b
    try:
        return QuadElt(a, b, int(m.group("D")))
    except ValueError as exc:
        raise ParseError(str(exc), text, m.start("D")) from None


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Inverse of :func:`parse_scalar`."""
    if isinstance(x, QuadElt):
        if x.b == 0:
            return _fmt_rational(x.a)
        b = x.b
        sign = "-" if b < 0 else "+"
        mag = abs(b)
        coeff = "" if mag == 1 else f"{_fmt_rational(mag)}*"
        tail = f"{coeff}sqrt({x.D})"
        if x.a == 0:
            return ("-" if sign == "-" else "") + tail
        return f"{_fmt_rational(x.a)}{sign}{tail}"
    return _fmt_rational(Fraction(x))
