"""Exact rational arithmetic primitives.

Everything in this package that is a number is either a Python int or an
``ExactRational`` (an alias of :class:`fractions.Fraction`).  Floats never
enter any computation: measures, deviations, bounds and polynomial
coefficients are all exact, and decimal strings exist only as labeled
display approximations produced by :func:`decimal_approx`.
"""
from __future__ import annotations

import decimal
import math
from fractions import Fraction

ExactRational = Fraction

#: significant digits used for display approximations
APPROX_DIGITS = 12


def binomial(n: int, p: int) -> int:
    """Binomial coefficient C(n, p), exact, with C(n, p) = 0 for p > n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    return math.comb(n, p)


def binomial_row(n: int) -> list[int]:
    """All of C(n, 0..n) in one pass, cheaper than n+1 comb() calls."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    row = [1] * (n + 1)
    for p in range(n):
        row[p + 1] = row[p] * (n - p) // (p + 1)
    return row


def rational_pow(q: Fraction, e: int) -> Fraction:
    """q**e for integer e of either sign, exact.

    Negative exponents invert; 0 to a negative power is rejected.
    """
    if e < 0 and q == 0:
        raise ValueError("0 cannot be raised to a negative power")
    return Fraction(q) ** e


def parse_rational(text: str) -> Fraction:
    """Parse "a/b", "a", or an exact decimal literal like "0.25".

    Decimal and scientific forms are read as exact base-10 values
    (Fraction("1e-3") == 1/1000); binary floats are never involved.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r} ({exc})") from None


def format_rational(q: Fraction) -> str:
    """Canonical string form: "num/den" in lowest terms, or "num" for integers."""
    return str(Fraction(q))


def decimal_approx(q: Fraction, significant: int = APPROX_DIGITS) -> str:
    """Display-only decimal approximation to `significant` digits.

    The result is a label for humans; all comparisons in this package are
    done on the exact values.
    """
    if significant < 1:
        raise ValueError(f"need at least 1 significant digit, got {significant}")
    with decimal.localcontext() as ctx:
        ctx.prec = significant
        return str(decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator))
