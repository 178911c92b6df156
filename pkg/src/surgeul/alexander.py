"""Symmetrized Alexander polynomials and their torsion coefficients.

A knot polynomial is stored as the nonnegative-index half a_0..a_g of the
symmetric Laurent polynomial a_0 + sum_{j>0} a_j (T^j + T^-j); the symmetry
a_{-j} = a_j is built into the representation, never validated.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidInputError, InvalidLabelError, NormalizationError


@dataclass(frozen=True)
class AlexanderPoly:
    """Symmetrized Alexander polynomial, coefficients a_0..a_g."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> int:
        """a_j, with a_{-j} = a_j and a_j = 0 beyond the degree."""
        j = abs(j)
        return self.coeffs[j] if j <= self.degree else 0

    def t_coeff(self, i: int) -> int:
        """Torsion coefficient: sum_{j>=1} j * a_{|i|+j}."""
        i = abs(i)
        return sum(j * self.coeffs[i + j] for j in range(1, self.degree - i + 1))

    def rel_torsion(self, k: int) -> int:
        """Torsion of the knot exterior at the odd relative label k.

        Equals sign(k) * sum_{j >= (|k|+1)/2} a_j; zero once |k| > 2g - 1.
        """
        if k % 2 == 0:
            raise InvalidLabelError(f"relative Spin^c labels are odd integers, got {k}")
        lo = (abs(k) + 1) // 2
        total = sum(self.coeffs[lo:])
        return total if k > 0 else -total

    def second_moment(self) -> int:
        """sum_{j>=1} j^2 * a_j (the Walker surgery-formula factor)."""
        return sum(j * j * a for j, a in enumerate(self.coeffs) if j >= 1)

    def delta_one(self) -> int:
        """Value of the polynomial at T = 1."""
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def vanishes_above(self, bound) -> bool:
        """True if a_j = 0 for every j > bound (bound may be rational)."""
        return all(a == 0 for j, a in enumerate(self.coeffs) if j > bound)


UNKNOT = AlexanderPoly((1,))


def make_poly(coeffs: Iterable[int], unchecked: bool = False) -> AlexanderPoly:
    """Validate a_0..a_g and strip trailing zeros.

    Raises NormalizationError unless Delta(1) = 1; pass unchecked=True to
    experiment with arbitrary symmetric integer sequences.
    """
    cs = [int(c) for c in coeffs]
    if not cs:
        raise InvalidInputError("need at least the constant coefficient a_0")
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    poly = AlexanderPoly(tuple(cs))
    if not unchecked and poly.delta_one() != 1:
        raise NormalizationError(
            f"Delta(1) = {poly.delta_one()} != 1; not a knot polynomial "
            "(use unchecked=True to bypass)"
        )
    return poly


def torus_knot_poly(a: int, b: int) -> AlexanderPoly:
    """Alexander polynomial of the (a,b) torus knot, a, b >= 2 coprime.

    Computed by exact division (t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1)).
    """
    if a < 2 or b < 2 or gcd(a, b) != 1:
        raise InvalidInputError(f"need coprime a, b >= 2, got ({a}, {b})")
    num = _poly_mul(_cyclo_like(a * b), [-1, 1])
    den = _poly_mul(_cyclo_like(a), _cyclo_like(b))
    full = _poly_divexact(num, den)  # degree (a-1)(b-1), palindromic
    g = (a - 1) * (b - 1) // 2
    return make_poly(full[g:])


def _cyclo_like(n: int) -> list[int]:
    # t^n - 1, lowest degree first
    return [-1] + [0] * (n - 1) + [1]


def _poly_mul(u: Sequence[int], v: Sequence[int]) -> list[int]:
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                out[i + j] += x * y
    return out


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    rem = list(num)
    dq = len(rem) - len(den)
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c, r = divmod(rem[k + len(den) - 1], den[-1])
        if r:
            raise InvalidInputError("polynomial division is not exact")
        quo[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] -= c * d
    if any(rem):
        raise InvalidInputError("polynomial division left a remainder")
    return quo
