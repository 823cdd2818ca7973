from .checks import FAIL, PASS, SKIPPED, CheckResult, char_poly, lin_polynomial, run_checks
from .matrix import PolyMatrix, crowell_entries, fox_jacobian, twisted_jacobian
from .order import (
    INTERPOLATION_LIMIT,
    determinant,
    determinant_bareiss,
    determinant_interpolation,
    minor_gcd,
    order_delta0,
)
from .pipeline import InvariantReport, alexander_lin, alexander_lin_polynomial, wada_invariant

__all__ = [
    "FAIL",
    "INTERPOLATION_LIMIT",
    "PASS",
    "SKIPPED",
    "CheckResult",
    "InvariantReport",
    "PolyMatrix",
    "alexander_lin",
    "alexander_lin_polynomial",
    "char_poly",
    "crowell_entries",
    "determinant",
    "determinant_bareiss",
    "determinant_interpolation",
    "fox_jacobian",
    "lin_polynomial",
    "minor_gcd",
    "order_delta0",
    "run_checks",
    "twisted_jacobian",
    "wada_invariant",
]
