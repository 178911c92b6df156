"""Renormalized Euler characteristics of p/q surgery on a knot.

Everything here reduces to the torsion sums T_i of the knot exterior and the
differences S_l = Eul(S^3_{p/q}(K), l) - Eul(S^3_{p/q}(U), l), computed two
ways: the reference formula

    S_l = (1/p) ( q * sum j^2 a_j - sum_{j=0}^{p-1} (p-j-1) T_{l+jx} )

and, when a_j = 0 for j >= p/2, the simplified per-label form

    S_l = (1/p) sum_{i>=1} (q i^2 + c_i) a_i.

Labels are the canonical residues 0..p-1 of the identification
l = (k-1)/2 mod p of relative Spin^c structures; the centered labeling with
the Spin structure at 0 (odd p) is exposed only through spin_label /
conjugate_label.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .alexander import AlexanderPoly
from .errors import InvalidSlopeError, PreconditionError
from .exactmath import Rational, mod_inv_neg
from .lens import eul_unknot_table, lambda_prime_unknot

# Test hook: set to -1 to corrupt the torsion-sum term of the reference
# formula (negative control for the self-test's recurrence suite).
_EQ6_TORSION_SIGN = 1


@dataclass(frozen=True)
class SurgerySlope:
    """Validated surgery slope p/q with the derived residue x = -q^{-1} mod p."""

    p: int
    q: int
    x: int = field(init=False)

    def __post_init__(self) -> None:
        if self.p < 1 or self.q == 0 or gcd(self.p, abs(self.q)) != 1:
            raise InvalidSlopeError(
                f"need p >= 1, q != 0, gcd(p, q) = 1; got p={self.p}, q={self.q}"
            )
        object.__setattr__(self, "x", mod_inv_neg(self.q, self.p))


def torsion_sum(K: AlexanderPoly, slope: SurgerySlope, i: int) -> int:
    """T_i: sum of rel_torsion(K, k) over odd k with (k-1)/2 = i (mod p)."""
    p = slope.p
    bound = 2 * K.degree - 1  # rel_torsion vanishes for |k| > bound
    total = 0
    k = 2 * (i % p) + 1
    k -= 2 * p * ((k + bound) // (2 * p))  # smallest representative >= -bound
    while k <= bound:
        total += K.rel_torsion(k)
        k += 2 * p
    return total


def torsion_table(K: AlexanderPoly, slope: SurgerySlope) -> list[int]:
    """T_i for every label i in 0..p-1."""
    return [torsion_sum(K, slope, i) for i in range(slope.p)]


def _require_halfwidth(K: AlexanderPoly, p: int, what: str) -> None:
    # the closed forms assume a_j = 0 for all j >= p/2
    if not K.vanishes_above(Fraction(p - 1, 2)):
        raise PreconditionError(
            f"{what} requires a_j = 0 for j >= p/2 (p={p}, degree {K.degree})"
        )


def torsion_sum_closed(K: AlexanderPoly, slope: SurgerySlope, i: int) -> int:
    """Closed form for T_i under the hypothesis a_j = 0 for j >= p/2."""
    p = slope.p
    _require_halfwidth(K, p, "torsion_sum_closed")
    i %= p
    if 2 * i < p:
        return sum(K.coeff(j) for j in range(i + 1, K.degree + 1))
    return -sum(K.coeff(j) for j in range(p - i, K.degree + 1))


def _s_numerator_direct(
    K: AlexanderPoly, slope: SurgerySlope, l: int, T: list[int] | None = None
) -> int:
    # p * S_l by the reference formula
    p, q, x = slope.p, slope.q, slope.x
    if T is None:
        T = torsion_table(K, slope)
    acc = 0
    lab = l % p
    for j in range(p):
        acc += (p - j - 1) * T[lab]
        lab = (lab + x) % p
    return q * K.second_moment() - _EQ6_TORSION_SIGN * acc


def s_diff_direct(K: AlexanderPoly, slope: SurgerySlope, l: int) -> Rational:
    """S_l by the reference formula (valid for every knot and slope)."""
    return Fraction(_s_numerator_direct(K, slope, l), slope.p)


def c_values(
    slope: SurgerySlope, l: int, i_max: int, debug: bool = False
) -> list[int] | tuple[list[int], list[int], list[int]]:
    """The integers c_1..c_{i_max} = sum_{j<=i} (u_j - v_j) for a fixed label.

    u_j and v_j are the residues in [0, p) with l + u_j x = j - 1 and
    l + v_j x = -j (mod p); equivalently u_j = q(l+1-j) and v_j = q(l+j)
    mod p, so c_i is p times the fractional-part sum of the simplified
    formula.  With debug=True, also returns the u_j and v_j lists.
    """
    p, q = slope.p, slope.q
    cs, us, vs = [], [], []
    acc = 0
    for j in range(1, i_max + 1):
        u = (q * (l + 1 - j)) % p
        v = (q * (l + j)) % p
        acc += u - v
        cs.append(acc)
        us.append(u)
        vs.append(v)
    return (cs, us, vs) if debug else cs


def _s_numerator_simplified(K: AlexanderPoly, slope: SurgerySlope, l: int) -> int:
    # p * S_l by the simplified formula
    p, q = slope.p, slope.q
    acc = 0
    c = 0
    for i in range(1, K.degree + 1):
        u = (q * (l + 1 - i)) % p
        v = (q * (l + i)) % p
        c += u - v
        a = K.coeff(i)
        if a:
            acc += (q * i * i + c) * a
    return acc


def s_diff_simplified(K: AlexanderPoly, slope: SurgerySlope, l: int) -> Rational:
    """S_l by the simplified formula; requires a_j = 0 for j >= p/2."""
    _require_halfwidth(K, slope.p, "s_diff_simplified")
    return Fraction(_s_numerator_simplified(K, slope, l), slope.p)


def spin_label(slope: SurgerySlope) -> int:
    """The label carrying the Spin structure: (p-1)(1-x)/2 mod p (p odd)."""
    if slope.p % 2 == 0:
        raise PreconditionError("the Spin structure label is defined for odd p only")
    return ((slope.p - 1) * (1 - slope.x) // 2) % slope.p


def conjugate_label(slope: SurgerySlope, l: int) -> int:
    """Spin^c conjugation as an involution on labels (p odd)."""
    return (2 * spin_label(slope) - l) % slope.p


@dataclass(frozen=True)
class EulTable:
    """Per-label invariants of S^3_{p/q}(K) together with the lens baseline."""

    slope: SurgerySlope
    knot: AlexanderPoly
    T: list[int]
    S: list[Rational]
    eul_unknot: list[Rational]
    eul_knot: list[Rational]
    lambda_prime_unknot: Rational
    lambda_prime_knot: Rational
    spin_label: int | None


def eul_table(K: AlexanderPoly, slope: SurgerySlope) -> EulTable:
    """Every Eul(S^3_{p/q}(K), l), via one reference evaluation of S_0 and
    the recurrence S_{i+x} = S_i + T_i (an O(p) pass; the per-label direct
    sum would be O(p^2))."""
    p, q, x = slope.p, slope.q, slope.x
    T = torsion_table(K, slope)
    num = [0] * p  # p * S_l
    num[0] = _s_numerator_direct(K, slope, 0, T)
    lab = 0
    for _ in range(p - 1):
        nxt = (lab + x) % p
        num[nxt] = num[lab] + p * T[lab]
        lab = nxt
    target = p * q * K.second_moment()
    if sum(num) != target or sum(T) != 0:
        raise AssertionError("internal consistency failure in the S-table")
    if K.vanishes_above(Fraction(p - 1, 2)):
        # cross-check the simplified formula on every label
        for l in range(p):
            if _s_numerator_simplified(K, slope, l) != num[l]:
                raise AssertionError(
                    f"simplified/reference formulas disagree at label {l}"
                )
    S = [Fraction(n, p) for n in num]
    base = eul_unknot_table(p, q)
    eul_k = [b + s for b, s in zip(base, S)]
    lam_u = sum(base, Fraction(0))
    lam_k = lam_u + q * K.second_moment()
    spin = spin_label(slope) if p % 2 == 1 else None
    return EulTable(slope, K, T, S, base, eul_k, lam_u, lam_k, spin)
