from .fox import fox_derivative, fox_gradient
from .free import FreeWord, parse_word
from .kernel import (
    KernelWord,
    parse_kernel_word,
    schreier_letters,
    schreier_rewrite,
    shift_kernel_word,
)
from .ring import GroupRingElement

__all__ = [
    "FreeWord",
    "GroupRingElement",
    "KernelWord",
    "fox_derivative",
    "fox_gradient",
    "parse_kernel_word",
    "parse_word",
    "schreier_letters",
    "schreier_rewrite",
    "shift_kernel_word",
]
