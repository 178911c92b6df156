"""Exact rational arithmetic helpers.

Every invariant computed by this package is a rational number and the test
suite compares them for exact equality, so all arithmetic goes through
`fractions.Fraction` (arbitrary precision, always in lowest terms with a
positive denominator).  No floating point anywhere.
"""

from fractions import Fraction
from math import ceil, floor, gcd

from .errors import InvalidSlopeError

# The rational type used throughout the package.
Rational = Fraction

RationalLike = Rational | int


def mod_inv_neg(q: int, p: int) -> int:
    """The unique x in [0, p) with q*x = -1 (mod p).

    Requires p >= 1 and gcd(p, q) = 1.
    """
    if p < 1:
        raise InvalidSlopeError(f"p must be a positive integer, got {p}")
    if gcd(p, q) != 1:
        raise InvalidSlopeError(f"p and q must be coprime, got p={p}, q={q}")
    return (-pow(q, -1, p)) % p


def frac(a: RationalLike) -> Rational:
    """Fractional part {a} = a - floor(a), always in [0, 1)."""
    return Fraction(a) - floor(a)


def ceil_q(a: RationalLike) -> int:
    """Least integer >= a."""
    return ceil(Fraction(a))
