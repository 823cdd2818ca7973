from .cyclotomic import graeffe, is_cyclotomic_product
from .mahler import (
    DEFAULT_TOLERANCE,
    CertifiedRoot,
    MahlerMeasure,
    certified_roots,
    mahler_measure,
    max_root_modulus,
)
from .poly import (
    LaurentPoly,
    cyclotomic_power,
    divides,
    exact_quotient,
    gcd,
    is_reciprocal,
    multiplicity,
    power_transform,
    resultant,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "CertifiedRoot",
    "LaurentPoly",
    "MahlerMeasure",
    "certified_roots",
    "cyclotomic_power",
    "divides",
    "exact_quotient",
    "gcd",
    "graeffe",
    "is_cyclotomic_product",
    "is_reciprocal",
    "mahler_measure",
    "max_root_modulus",
    "multiplicity",
    "power_transform",
    "resultant",
]
