import logging
from dataclasses import dataclass, field
from typing import Mapping

from sympy.combinatorics import Permutation

from ..errors import RepresentationError
from ..groups import AugmentedGroupSystem, kernel_presentation, normalize
from ..laurent import LaurentPoly
from ..reps import PeriodicRep, extends_over_G, to_cycles
from ..words import FreeWord, schreier_rewrite
from ..workers import DEFAULT_THREADS
from .checks import FAIL, CheckResult, run_checks
from .matrix import fox_jacobian, twisted_jacobian
from .order import order_delta0

logger = logging.getLogger(__name__)


@dataclass
class InvariantReport:
    system: str
    N: int
    r: int
    D: LaurentPoly
    checks: list[CheckResult] = field(default_factory=list)
    transitive: bool = True
    orbits: list[list[int]] = field(default_factory=list)
    T: int | None = None
    extends: bool = False
    witness: list[list[int]] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.D.span

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "N": self.N,
            "r": self.r,
            "D": {"text": str(self.D), **self.D.to_json()},
            "degree": self.degree,
            "transitive": self.transitive,
            "orbits": self.orbits,
            "T": self.T,
            "extends": self.extends,
            "X": self.witness,
            "checks": [c.to_json() for c in self.checks],
            "notes": self.notes,
        }


def _image(rho: Mapping[str, Permutation], word: FreeWord, n: int) -> Permutation:
    result = Permutation(list(range(n)))
    for gen, e in word:
        p = rho[gen]
        result = result * (p if e == 1 else ~p)
    return result


def wada_invariant(system: AugmentedGroupSystem, rho: Mapping[str, Permutation]) -> LaurentPoly:
    """Gcd of maximal minors of the evaluated Fox Jacobian, distinguished column removed."""
    missing = [g for g in system.generators if g not in rho]
    if missing:
        raise RepresentationError(f"no image for generators {missing}")
    sizes = {p.size for p in rho.values()}
    if len(sizes) != 1:
        raise RepresentationError(f"images have different degrees {sorted(sizes)}")
    (n,) = sizes
    for rel in system.relators:
        if not _image(rho, rel, n).is_Identity:
            raise RepresentationError(f"relator {rel} is not sent to the identity; not a homomorphism")
    return order_delta0(fox_jacobian(system, rho))


def alexander_lin(
    system: AugmentedGroupSystem,
    rep: PeriodicRep,
    allow_reducible: bool = False,
    threads: int = DEFAULT_THREADS,
    method: str = "auto",
    checks: bool = True,
) -> InvariantReport:
    """``D_{rho,r}(s)`` of ``rep`` together with the applicable structural checks."""
    system = normalize(system)
    kp = kernel_presentation(system)
    rep.verify(kp, allow_reducible=allow_reducible)
    matrix = twisted_jacobian(kp, rep)
    logger.info("twisted Jacobian is %dx%d", *matrix.shape)
    D = order_delta0(matrix, threads, method)
    notes = [f"presentation matrix is {matrix.shape[0]}x{matrix.shape[1]}"]
    if D.is_zero():
        notes.append("D is identically zero")

    T = None
    if system.longitude is not None:
        if system.longitude_abelian_only and not rep.has_abelian_image():
            notes.append("longitude is only valid for abelian images; T not computed")
        else:
            T = rep.longitude_orbits(schreier_rewrite(system.longitude, system.epsilon, system.distinguished))
    extension = extends_over_G(rep)
    report = InvariantReport(
        system=system.label,
        N=rep.N,
        r=rep.r,
        D=D,
        transitive=rep.is_transitive(),
        orbits=rep.orbits(),
        T=T,
        extends=extension is not None,
        witness=to_cycles(extension) if extension is not None else None,
        notes=notes,
    )
    if checks:
        report.checks = run_checks(system, rep, D, extension, extension_known=True, threads=threads)
    return report


def alexander_lin_polynomial(
    system: AugmentedGroupSystem, rep: PeriodicRep, threads: int = DEFAULT_THREADS, method: str = "auto"
) -> LaurentPoly:
    """Just ``D``: no transitivity requirement and no checks."""
    kp = kernel_presentation(system)
    return order_delta0(twisted_jacobian(kp, rep), threads, method)
