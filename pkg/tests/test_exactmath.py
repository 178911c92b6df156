from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surgeul import InvalidSlopeError, ceil_q, frac, mod_inv_neg

rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**4
)


def test_mod_inv_neg_examples():
    assert mod_inv_neg(1, 5) == 4
    assert mod_inv_neg(2, 5) == 2  # 2*2 = 4 = -1 mod 5
    assert mod_inv_neg(-1, 7) == 1


def test_mod_inv_neg_degenerate():
    assert mod_inv_neg(1, 1) == 0
    assert mod_inv_neg(-3, 1) == 0


def test_mod_inv_neg_errors():
    with pytest.raises(InvalidSlopeError):
        mod_inv_neg(2, 4)
    with pytest.raises(InvalidSlopeError):
        mod_inv_neg(3, 0)


@given(st.integers(min_value=1, max_value=10**6), st.integers(-10**6, 10**6))
def test_mod_inv_neg_defining_congruence(p, q):
    from math import gcd

    if q == 0 or gcd(p, abs(q)) != 1:
        return
    x = mod_inv_neg(q, p)
    assert 0 <= x < p
    assert (q * x + 1) % p == 0


def test_frac_examples():
    assert frac(Fraction(8, 5)) == Fraction(3, 5)
    assert frac(Fraction(-3, 5)) == Fraction(2, 5)
    assert frac(2) == 0


def test_ceil_examples():
    assert ceil_q(Fraction(3, 2)) == 2
    assert ceil_q(Fraction(-3, 5)) == 0
    assert ceil_q(4) == 4


@given(rationals)
def test_frac_range_and_integrality(a):
    f = frac(a)
    assert 0 <= f < 1
    assert (a - f).denominator == 1


@given(rationals, st.integers(-100, 100))
def test_frac_shift_invariance(a, n):
    assert frac(a + n) == frac(a)


@given(rationals)
def test_ceil_bracket(a):
    c = ceil_q(a)
    assert c - 1 < a <= c
