import logging
from dataclasses import dataclass, field
from itertools import product

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from ..errors import RepresentationError
from ..groups import AugmentedGroupSystem, KernelPresentation, kernel_presentation, untwisted_alexander
from ..laurent import cyclotomic_power, resultant
from .periodic import PeriodicRep
from .permutation import full_cycle

logger = logging.getLogger(__name__)


@dataclass
class ResultantGate:
    resultant: int
    p: int
    r: int

    @property
    def passes(self) -> bool:
        return self.resultant % self.p == 0


@dataclass
class CyclicResult:
    reps: list[PeriodicRep]
    gate: ResultantGate
    nullity: int = 0
    notes: list[str] = field(default_factory=list)


def resultant_gate(system: AugmentedGroupSystem, p: int, r: int) -> ResultantGate:
    """``|Res(Delta(t), t^r - 1)|`` and whether ``p`` divides it."""
    delta = untwisted_alexander(system)
    res = abs(resultant(delta, cyclotomic_power(r, delta.var)))
    return ResultantGate(res, p, r)


def circulant_row(kp: KernelPresentation) -> dict[int, int]:
    """Exponent sum of the template at each shift index."""
    if len(kp.generators) != 1:
        raise RepresentationError(
            f"cyclic representations need one kernel generator, found {list(kp.generators)}"
        )
    row: dict[int, int] = {}
    for template in kp.templates:
        for (_, mu), e in template:
            row[mu] = row.get(mu, 0) + e
    return row


def cyclic_rep(kp: KernelPresentation, p: int, exponents: tuple[int, ...]) -> PeriodicRep:
    """``a_nu -> alpha^(e_nu)`` with ``alpha = (1 2 ... p)``."""
    alpha = full_cycle(p)
    (gen,) = kp.generators
    images = tuple(alpha ** (e % p) for e in exponents)
    return PeriodicRep(p, len(exponents), {gen: images})


def _null_space(kp: KernelPresentation, p: int, r: int) -> list[list[int]]:
    offsets = circulant_row(kp)
    if len(kp.templates) != 1:
        raise RepresentationError("cyclic representations need a one-relator presentation")
    field_ = GF(p)
    rows = []
    for nu in range(r):
        row = [0] * r
        for mu, c in offsets.items():
            row[(mu + nu) % r] += c
        rows.append([field_(v) for v in row])
    matrix = DomainMatrix(rows, (r, r), field_)
    basis = matrix.nullspace().to_Matrix()
    return [[int(basis[i, j]) % p for j in range(r)] for i in range(basis.rows)]


def cyclic_reps_mod_p(system: AugmentedGroupSystem, p: int, r: int) -> CyclicResult:
    """Period-``r`` representations with image in ``<alpha>``, alpha a ``p``-cycle.

    Candidates come from the null space of the circulant of the relator mod ``p``;
    each one is checked against every relator instance before it is returned.
    """
    gate = resultant_gate(system, p, r)
    if not gate.passes:
        note = (
            f"Res(Delta, t^{r} - 1) = {gate.resultant} is not divisible by {p}; "
            "no nontrivial cyclic representations exist"
        )
        logger.info(note)
        return CyclicResult([], gate, 0, [note])

    kp = kernel_presentation(system)
    basis = _null_space(kp, p, r)
    logger.info("circulant null space mod %d has dimension %d", p, len(basis))
    reps = []
    for coeffs in product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        vector = tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) % p for j in range(r))
        rep = cyclic_rep(kp, p, vector)
        if rep.failures(kp):
            logger.debug("null vector %s fails verification", vector)
            continue
        reps.append(rep)
    reps.sort()
    return CyclicResult(reps, gate, len(basis), [f"null space mod {p} has dimension {len(basis)}"])


def exponent_vector(rep: PeriodicRep) -> tuple[int, ...]:
    """Recover ``(e_nu)`` from a representation built by ``cyclic_rep``."""
    alpha = full_cycle(rep.N)
    (row,) = rep.table.values()
    out = []
    for image in row:
        e = next((k for k in range(rep.N) if alpha**k == image), None)
        if e is None:
            raise RepresentationError(f"{image} is not a power of the standard cycle")
        out.append(e)
    return tuple(out)
