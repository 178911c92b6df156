from fractions import Fraction
from math import gcd

import pytest

from surgeul import (
    InvalidSlopeError,
    SurgerySlope,
    conjugate_label,
    d_lens,
    d_lens_table,
    eul_table,
    eul_unknot,
    eul_unknot_table,
    lambda_prime_unknot,
    torus_knot_poly,
)

SMALL_PAIRS = [
    (p, q)
    for p in range(1, 26)
    for q in range(-10, 11)
    if q != 0 and gcd(p, abs(q)) == 1
]


def test_s3_has_zero_correction_term():
    assert d_lens(1, 1, 0) == 0
    for q in (-5, -1, 2, 7):
        assert d_lens(1, q, 0) == 0


def test_rp3_multiset():
    assert sorted(d_lens_table(2, 1)) == [Fraction(-1, 4), Fraction(1, 4)]
    assert sorted(eul_unknot_table(2, 1)) == [Fraction(-1, 8), Fraction(1, 8)]


def test_eul_unknot_is_minus_half_d():
    for (p, q) in [(5, 2), (7, 3), (12, 5)]:
        for l in range(p):
            assert eul_unknot(p, q, l) == -d_lens(p, q, l) / 2


@pytest.mark.parametrize("p,q", [(p, q) for (p, q) in SMALL_PAIRS if p % 2 == 1])
def test_conjugation_symmetry(p, q):
    slope = SurgerySlope(p, q)
    d = d_lens_table(p, q)
    for l in range(p):
        assert d[l] == d[conjugate_label(slope, l)]


@pytest.mark.parametrize("p,q", SMALL_PAIRS)
def test_denominator_divides_4p(p, q):
    for v in d_lens_table(p, q):
        assert (4 * p * v).denominator == 1


def test_q_periodicity():
    # L(-p, q) depends on q only modulo p
    assert d_lens_table(7, 3) == d_lens_table(7, 10) == d_lens_table(7, -4)


def test_lambda_prime_unknot_trivial_surgeries():
    assert lambda_prime_unknot(1, 1) == 0
    for n in (-3, -1, 2, 5):
        assert lambda_prime_unknot(1, n) == 0


def test_lambda_prime_unknot_frozen_regression():
    # pinned by the oracle run: sum of Eul over the 5 labels of L(-5,2)
    assert lambda_prime_unknot(5, 2) == 0
    # a case with nonzero value, frozen from the same run
    assert lambda_prime_unknot(3, 1) == sum(eul_unknot_table(3, 1), Fraction(0))


def test_invalid_slopes():
    with pytest.raises(InvalidSlopeError):
        d_lens_table(4, 2)
    with pytest.raises(InvalidSlopeError):
        d_lens_table(0, 1)
    with pytest.raises(InvalidSlopeError):
        d_lens_table(5, 0)


# Lens-space surgeries on torus knots: p/q surgery on T(a,b) with
# p = q*a*b -+ 1 yields the lens space -L(p, q*b^2) in the orientation
# convention where S^3_{p/q}(U) = L(-p, q).  These fix the labeling
# calibration of the d-invariant recursion against external data.
MOSER_ANCHORS = [
    (2, 3, 5, 1), (2, 3, 7, 1), (2, 3, 11, 2), (2, 3, 13, 2),
    (2, 5, 9, 1), (2, 5, 11, 1), (2, 5, 19, 2), (2, 5, 21, 2),
    (3, 4, 11, 1), (3, 4, 13, 1),
    (3, 5, 14, 1), (3, 5, 16, 1),  # even p
    (2, 7, 13, 1), (2, 7, 15, 1),
    (3, 5, 29, 2), (3, 5, 31, 2),
]


@pytest.mark.parametrize("a,b,p,q", MOSER_ANCHORS)
def test_torus_knot_lens_surgery_anchors(a, b, p, q):
    assert abs(p - q * a * b) == 1
    table = eul_table(torus_knot_poly(a, b), SurgerySlope(p, q))
    target = eul_unknot_table(p, (q * b * b) % p)
    assert sorted(table.eul_knot) == sorted(target)
