from .dsl import format_dsl, load_system, parse_dsl
from .normalize import (
    KernelPresentation,
    alexander_matrix,
    is_normalized,
    kernel_presentation,
    normalize,
    untwisted_alexander,
)
from .presentation import AugmentedGroupSystem, HNNData, Presentation

__all__ = [
    "AugmentedGroupSystem",
    "HNNData",
    "KernelPresentation",
    "Presentation",
    "alexander_matrix",
    "format_dsl",
    "is_normalized",
    "kernel_presentation",
    "load_system",
    "normalize",
    "parse_dsl",
    "untwisted_alexander",
]
