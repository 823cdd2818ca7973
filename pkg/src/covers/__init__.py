from .branched import branched_cover_matrix, branched_homology, torsion_number
from .growth import (
    GrowthRow,
    GrowthTable,
    degenerate_n,
    fibered_spectral_check,
    least_squares_slope,
    mahler_growth_experiment,
)
from .smith import EXACT_SNF_LIMIT, IntMatrix, SmithForm, smith_diagonal, smith_normal_form

__all__ = [
    "EXACT_SNF_LIMIT",
    "GrowthRow",
    "GrowthTable",
    "IntMatrix",
    "SmithForm",
    "branched_cover_matrix",
    "branched_homology",
    "degenerate_n",
    "fibered_spectral_check",
    "least_squares_slope",
    "mahler_growth_experiment",
    "smith_diagonal",
    "smith_normal_form",
    "torsion_number",
]
