"""Symmetry verification and the L-space surgery obstruction test.

The obstruction: if a manifold with known correction terms is p/q surgery
(p/q > 1) on some knot in S^3 and an L-space, then its correction terms
differ from the lens-space baseline by -2 t_i for a symmetric, integral,
finitely supported sequence t_i vanishing for |i| > p/2q.  Since the Spin^c
labeling of a manifold in the wild is not canonically matched to the surgery
labeling, the test searches all 2p affine identifications (p shifts times an
optional reflection).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .alexander import AlexanderPoly, make_poly
from .errors import InvalidInputError, PreconditionError
from .exactmath import Rational, ceil_q
from .lens import d_lens_table
from .surgery import SurgerySlope, s_diff_direct, s_diff_simplified, torsion_table


@dataclass(frozen=True)
class TheoremCheck:
    """One per-offset comparison S_{r+i} == t_i."""

    i: int
    label: int
    expected: int
    actual: Rational
    ok: bool


@dataclass(frozen=True)
class TheoremReport:
    passed: bool
    r: int
    window: int
    checks: list[TheoremCheck]


@dataclass(frozen=True)
class ObstructionReport:
    verdict: bool
    witness_shift: int | None
    reflected: bool
    t_sequence: dict[int, Rational]
    violations: list[tuple[int, Rational, Rational]]


@dataclass(frozen=True)
class SmallSlopeReport:
    passed: bool
    expected_value: int
    column: list[Rational]
    single_bump: bool  # exactly one nonzero label, as the remark's shape
    bump_at_minus_one: bool  # value ceil(q/p)*a_1 sits at label p-1


def _require_big_slope(slope: SurgerySlope) -> None:
    if slope.q < 1 or slope.p <= slope.q:
        raise PreconditionError(f"need p/q > 1, got {slope.p}/{slope.q}")


def _window(slope: SurgerySlope) -> int:
    # largest integer i with |i| <= p/2q
    return slope.p // (2 * slope.q)


def _s_value(K: AlexanderPoly, slope: SurgerySlope, l: int) -> Rational:
    if K.vanishes_above(Fraction(slope.p - 1, 2)):
        return s_diff_simplified(K, slope, l)
    return s_diff_direct(K, slope, l)


def verify_theorem12(K: AlexanderPoly, slope: SurgerySlope, n: int) -> TheoremReport:
    """Check S_{r+i} = t_i for r = ceil(pn/q - 1) and every |i| <= p/2q.

    Hypotheses (checked): p/q > 1 and a_j = 0 for all j > p/2q + 1.
    """
    _require_big_slope(slope)
    p, q = slope.p, slope.q
    if not K.vanishes_above(Fraction(p, 2 * q) + 1):
        raise PreconditionError(
            f"need a_j = 0 for j > p/2q + 1 = {Fraction(p, 2 * q) + 1} "
            f"(degree is {K.degree})"
        )
    r = ceil_q(Fraction(p * n, q) - 1) % p
    w = _window(slope)
    checks = []
    for i in range(-w, w + 1):
        label = (r + i) % p
        expected = K.t_coeff(i)
        actual = _s_value(K, slope, label)
        checks.append(TheoremCheck(i, label, expected, actual, actual == expected))
    return TheoremReport(all(c.ok for c in checks), r, w, checks)


def _poly_from_t(t: list[int]) -> AlexanderPoly:
    # invert t_i = sum_{j>=1} j a_{i+j}: a_j is the second difference of t,
    # a_0 pinned by Delta(1) = 1
    padded = t + [0, 0]
    a = [padded[j - 1] - 2 * padded[j] + padded[j + 1] for j in range(1, len(t) + 1)]
    a0 = 1 - 2 * sum(a)
    return make_poly([a0] + a)


def lspace_obstruction(
    d_candidate: list[Rational], slope: SurgerySlope, strict: bool = False
) -> ObstructionReport:
    """Test whether a candidate d-table is consistent with an L-space p/q
    surgery on some knot in S^3.

    For each affine identification sigma of the candidate's labels with the
    surgery labeling, torsion coefficients are extracted around the n = 0
    center (t_i = -(d_candidate(sigma(i-1)) - d_lens(p,q,i-1))/2 for
    |i| <= p/2q), rounded to the unique integer sequence they could be, and
    the full table the resulting knot polynomial would produce is compared
    against the candidate.  A perfect match certifies symmetry, integrality
    and vanishing of t_i beyond the window all at once.  With strict=True
    the extracted t_i must also be nonnegative.
    """
    _require_big_slope(slope)
    p, q = slope.p, slope.q
    if len(d_candidate) != p:
        raise InvalidInputError(f"expected exactly {p} d-values, got {len(d_candidate)}")
    d_cand = [Fraction(v) for v in d_candidate]
    base = d_lens_table(p, q)
    w = _window(slope)
    best: tuple[int, int, bool] | None = None  # (violation count, shift, reflected)
    best_data: tuple[dict[int, Rational], list[tuple[int, Rational, Rational]]] = ({}, [])
    for reflected in (False, True):
        for shift in range(p):
            sigma = lambda m: (shift - m if reflected else shift + m) % p
            t_raw = {
                i: -(d_cand[sigma((i - 1) % p)] - base[(i - 1) % p]) / 2
                for i in range(-w, w + 1)
            }
            t_int = [_nearest_int(t_raw[i]) for i in range(w + 1)]
            K = _poly_from_t(t_int)
            violations = []
            for l in range(p):
                expected = base[l] - 2 * _s_value(K, slope, l)
                actual = d_cand[sigma(l)]
                if actual != expected:
                    violations.append((sigma(l), expected, actual))
            if strict and not violations and any(v < 0 for v in t_int):
                violations.append((sigma((0 - 1) % p), Fraction(0), Fraction(min(t_int))))
            t_seq = {abs(i): t_raw[i] for i in range(w + 1)}
            key = (len(violations), shift, reflected)
            if best is None or key < best:
                best = key
                best_data = (t_seq, violations)
            if not violations:
                return ObstructionReport(True, shift, reflected, t_seq, [])
    t_seq, violations = best_data
    return ObstructionReport(False, None, best[2], t_seq, violations)


def _nearest_int(v: Fraction) -> int:
    # deterministic nearest integer, ties toward zero
    fl = v.numerator // v.denominator
    rem = v - fl
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and fl < 0):
        return fl + 1
    return fl


def small_slope_check(K: AlexanderPoly, slope: SurgerySlope) -> SmallSlopeReport:
    """Verify the genus-one closed form of the S-column for p/q <= 1.

    For knots with a_j = 0 for j > 1 the reference formula collapses to

        S_l = ( floor(q(l+1)/p) - floor(ql/p) ) * a_1,

    which places ceil(q/p)*a_1 at label p-1.  (The column has a single
    nonzero entry only when p = 1 or a_1 = 0; the report records whether
    that shape holds and whether the ceil(q/p)*a_1 value sits at the label
    the centered convention calls -1.)
    """
    p, q = slope.p, slope.q
    if Fraction(p, q) > 1:
        raise PreconditionError(f"small_slope_check needs p/q <= 1, got {p}/{q}")
    if not K.vanishes_above(1):
        raise PreconditionError(f"need a_j = 0 for j > 1, degree is {K.degree}")
    a1 = K.coeff(1)
    column = [s_diff_direct(K, slope, l) for l in range(p)]
    closed = [(q * (l + 1) // p - q * l // p) * a1 for l in range(p)]
    expected = ceil_q(Fraction(q, p)) * a1
    passed = column == closed and column[p - 1] == expected
    nonzero = [l for l, v in enumerate(column) if v != 0]
    single = len(nonzero) <= 1
    return SmallSlopeReport(passed, expected, column, single, column[p - 1] == expected)
