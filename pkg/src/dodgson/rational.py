"""Exact rational scalars and their text grammar.

Every matrix entry handled by this package is an exact rational (or a
polynomial with rational coefficients).  The stdlib ``Fraction`` already
guarantees the canonical form we rely on everywhere: positive denominator,
numerator and denominator coprime, zero stored as 0/1.  This module adds
only the strict literal grammar used by the file formats:

    sign? digits ('.' digits)?     e.g.  "28.25", "-3", "0"
    sign? digits '/' digits        e.g.  "-13/6", "113/4"   (denominator > 0)

Scientific notation and bare fractional parts (".5") are rejected so that
a malformed file fails loudly instead of being silently reinterpreted.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_LITERAL = re.compile(r"[+-]?\d+(?:\.\d+)?$|[+-]?\d+/\d+$")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal or p/q literal into an exact Fraction.

    Decimals convert via a power-of-ten denominator ("28.25" -> 113/4) and
    are then reduced; fraction literals must have a nonzero denominator.
    Raises ValueError on anything outside the grammar.
    """
    s = text.strip()
    if not _LITERAL.match(s):
        raise ValueError(f"malformed rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Canonical text: "p/q" when q != 1, else "p".  Re-parseable."""
    return str(value)
