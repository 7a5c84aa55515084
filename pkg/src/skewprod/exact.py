"""Exact scalar helpers: rationals, +infinity, and their string forms.

Every numeric quantity in this package is an int, a Fraction, or the
INF singleton.  Floats never appear; all comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction


class _PosInf:
    """Positive infinity for weight bounds (l2 in the unbounded cases).

    Compares greater than every finite number; its reciprocal is 0.
    """

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INF

    def __gt__(self, other):
        return other is not INF

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is INF

    def __ne__(self, other):
        return other is not INF

    def __hash__(self):
        return hash("skewprod-inf")

    def __repr__(self):
        return "INF"


INF = _PosInf()


def is_inf(x) -> bool:
    return x is INF


def recip(x):
    """Exact reciprocal extended by recip(INF) = 0 and recip(0) = INF."""
    if x is INF:
        return Fraction(0)
    x = Fraction(x)
    if x == 0:
        return INF
    return 1 / x


def as_coeff(x):
    """Canonical coefficient: int when integral, Fraction otherwise."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"exact coefficient expected, got {type(x).__name__}")


def format_exact(x) -> str:
    """Render an exact scalar as 'a', 'a/b' or 'inf'."""
    if x is INF:
        return "inf"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    raise TypeError(f"exact scalar expected, got {type(x).__name__}")


def parse_rational(text: str):
    """Parse 'a', 'a/b' or 'inf' back into an exact scalar."""
    text = text.strip()
    if text == "inf":
        return INF
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc
