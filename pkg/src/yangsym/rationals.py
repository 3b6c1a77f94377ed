"""Exact rational scalars.

Every coefficient in this package is an arbitrary-precision rational;
nothing is ever rounded.  gmpy2's mpq is used when available (it is much
faster), with fractions.Fraction as a drop-in fallback.
"""

from math import comb, factorial

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

from fractions import Fraction

#: types accepted wherever a rational scalar is expected
RATIONAL_TYPES = (int, type(Q(0)), Fraction)

QZERO = Q(0)
QONE = Q(1)


def as_rational(x):
    """Coerce an int / Fraction / mpq / 'p/q' string to the canonical Q type."""
    if isinstance(x, type(QONE)):
        return x
    if isinstance(x, (int, Fraction, str)):
        return Q(x)
    raise TypeError(f"not a rational scalar: {x!r}")


def rational_str(x):
    """Canonical string form 'p' or 'p/q' with q > 0 and gcd(p,q)=1."""
    return str(as_rational(x))


def binomial(n, k):
    """Exact binomial coefficient, zero outside the Pascal triangle."""
    if k < 0 or (n >= 0 and k > n):
        return 0
    return comb(n, k)


__all__ = [
    "Q",
    "QZERO",
    "QONE",
    "RATIONAL_TYPES",
    "as_rational",
    "rational_str",
    "binomial",
    "factorial",
]
