"""Helpers for exact rationals and their "p/q" string form used in JSON I/O."""

from fractions import Fraction


def parse_rational(s) -> Fraction:
    """Parse "p/q" or "p" strings (also plain ints) into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q", or just "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
