from .cyclic import (
    CyclicResult,
    ResultantGate,
    circulant_row,
    cyclic_rep,
    cyclic_reps_mod_p,
    exponent_vector,
    resultant_gate,
)
from .extension import extends_over_G
from .periodic import PeriodicRep, load_rep, orbit_decomposition, trivial_rep
from .permutation import all_permutations, from_cycles, full_cycle, identity, to_cycles
from .search import DEFAULT_LIMIT, EnumerationResult, enumerate_periodic

__all__ = [
    "DEFAULT_LIMIT",
    "CyclicResult",
    "EnumerationResult",
    "PeriodicRep",
    "ResultantGate",
    "all_permutations",
    "circulant_row",
    "cyclic_rep",
    "cyclic_reps_mod_p",
    "enumerate_periodic",
    "exponent_vector",
    "extends_over_G",
    "from_cycles",
    "full_cycle",
    "identity",
    "load_rep",
    "orbit_decomposition",
    "resultant_gate",
    "to_cycles",
    "trivial_rep",
]
