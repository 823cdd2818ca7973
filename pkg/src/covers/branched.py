import logging

from ..alexmod import crowell_entries
from ..errors import InputError
from ..groups import AugmentedGroupSystem, kernel_presentation, normalize
from ..reps import PeriodicRep
from .smith import IntMatrix, SmithForm, smith_normal_form

logger = logging.getLogger(__name__)


def branched_cover_matrix(system: AugmentedGroupSystem, rep: PeriodicRep, n: int) -> IntMatrix:
    """Relation matrix of ``H_1`` of the ``N``-fold cover of the ``rn``-fold branched cyclic cover.

    The twisted Jacobian with shift indices read mod ``rn`` and ``s = 1``.
    """
    if not system.knot:
        raise InputError(f"system {system.label} is not declared a knot group; branched covers need 'knot;'")
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    system = normalize(system)
    kp = kernel_presentation(system)
    rep.verify(kp)
    entries, (n_rows, n_cols), _, _ = crowell_entries(kp, rep, wrap=rep.r * n)
    rows = [[0] * n_cols for _ in range(n_rows)]
    for (i, j), terms in entries.items():
        rows[i][j] = sum(terms.values())
    return IntMatrix(rows)


def branched_homology(
    system: AugmentedGroupSystem, rep: PeriodicRep, n: int, method: str = "auto"
) -> SmithForm:
    matrix = branched_cover_matrix(system, rep, n)
    form = smith_normal_form(matrix, method)
    logger.debug("n=%d: torsion %d, free rank %d", n, form.torsion, form.free_rank)
    return form


def torsion_number(system: AugmentedGroupSystem, rep: PeriodicRep, n: int, method: str = "auto") -> int:
    """``b_{rho,rn}``: order of the torsion subgroup."""
    return branched_homology(system, rep, n, method).torsion
