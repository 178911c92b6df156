"""Exact surgery invariants: renormalized Euler characteristics, Turaev
torsion sums, Casson-Walker values and L-space obstructions for p/q
surgeries on knots in S^3, all in exact rational arithmetic."""

from .alexander import UNKNOT, AlexanderPoly, make_poly, torus_knot_poly
from .errors import (
    InvalidInputError,
    InvalidLabelError,
    InvalidSlopeError,
    NormalizationError,
    PreconditionError,
    SurgeulError,
)
from .exactmath import Rational, ceil_q, frac, mod_inv_neg
from .lens import d_lens, d_lens_table, eul_unknot, eul_unknot_table, lambda_prime_unknot
from .obstruction import (
    ObstructionReport,
    SmallSlopeReport,
    TheoremReport,
    lspace_obstruction,
    small_slope_check,
    verify_theorem12,
)
from .selftest import run_selftest
from .surgery import (
    EulTable,
    SurgerySlope,
    c_values,
    conjugate_label,
    eul_table,
    s_diff_direct,
    s_diff_simplified,
    spin_label,
    torsion_sum,
    torsion_sum_closed,
    torsion_table,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderPoly", "EulTable", "ObstructionReport", "Rational",
    "SmallSlopeReport", "SurgerySlope", "SurgeulError", "TheoremReport",
    "UNKNOT", "InvalidInputError", "InvalidLabelError", "InvalidSlopeError",
    "NormalizationError", "PreconditionError",
    "c_values", "ceil_q", "conjugate_label", "d_lens", "d_lens_table",
    "eul_table", "eul_unknot", "eul_unknot_table", "frac",
    "lambda_prime_unknot", "lspace_obstruction", "make_poly", "mod_inv_neg",
    "run_selftest", "s_diff_direct", "s_diff_simplified", "small_slope_check",
    "spin_label", "torsion_sum", "torsion_sum_closed", "torsion_table",
    "torus_knot_poly", "verify_theorem12",
]
