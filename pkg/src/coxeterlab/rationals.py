"""Exact rational scalars.

gmpy2.mpq is used when available (noticeably faster on the big determinant
runs); stdlib fractions.Fraction is the fallback.  Everything else in the
package funnels rational construction through ``QQ`` so the two backends
never mix.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    QQ = Fraction
    HAVE_GMPY2 = False

ZERO = QQ(0)
ONE = QQ(1)

_RAT_TYPES = (int, type(ZERO), Fraction)


def as_rational(x):
    """Coerce ints, Fractions, mpqs and 'p/q' strings to the active backend."""
    if isinstance(x, type(ZERO)):
        return x
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, str):
        return QQ(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def is_rational(x) -> bool:
    return isinstance(x, _RAT_TYPES)


def rat_sign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def rat_str(q) -> str:
    """Canonical 'p' or 'p/q' form."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
