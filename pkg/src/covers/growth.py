import csv
import io
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..alexmod import CheckResult, alexander_lin_polynomial
from ..alexmod.checks import FAIL, PASS, SKIPPED
from ..errors import VanishingPolynomialError
from ..groups import AugmentedGroupSystem, normalize
from ..laurent import LaurentPoly, cyclotomic_power, exact_quotient, gcd, mahler_measure, max_root_modulus, multiplicity
from ..reps import PeriodicRep
from ..workers import DEFAULT_THREADS, gather_map
from .branched import branched_homology

logger = logging.getLogger(__name__)

CSV_FIELDS = ["n", "b", "b_pow", "free_rank", "degenerate"]


@dataclass
class GrowthRow:
    n: int
    b: int
    b_pow: float
    free_rank: int
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "b": str(self.b),
            "b_pow": self.b_pow,
            "free_rank": self.free_rank,
            "degenerate": self.degenerate,
        }


@dataclass
class GrowthTable:
    system: str
    N: int
    r: int
    D: LaurentPoly
    mahler: float
    mahler_error: float
    rows: list[GrowthRow] = field(default_factory=list)
    slope: float | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def last_three(self) -> list[float]:
        return [row.b_pow for row in self.rows[-3:]]

    @property
    def final_gap(self) -> float | None:
        if not self.rows:
            return None
        return abs(self.rows[-1].b_pow - self.mahler)

    @property
    def growth_estimate(self) -> float | None:
        return math.exp(self.slope) if self.slope is not None else None

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "N": self.N,
            "r": self.r,
            "D": {"text": str(self.D), **self.D.to_json()},
            "mahler": self.mahler,
            "mahler_error": self.mahler_error,
            "rows": [row.to_json() for row in self.rows],
            "slope": self.slope,
            "growth_estimate": self.growth_estimate,
            "last_three": self.last_three,
            "final_gap": self.final_gap,
            "notes": self.notes,
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for row in self.rows:
            writer.writerow([row.n, row.b, f"{row.b_pow:.12g}", row.free_rank, int(row.degenerate)])
        return out.getvalue()


def degenerate_n(D: LaurentPoly, n: int) -> bool:
    """Whether ``D`` with its ``(s - 1)`` factors removed shares a root with ``s^n - 1``."""
    s1 = LaurentPoly([-1, 1], var=D.var)
    core = D.normalized()
    k = multiplicity(core, s1)
    if k:
        core = exact_quotient(core, s1**k)
    return not gcd(core, cyclotomic_power(n, D.var)).is_unit()


def least_squares_slope(rows: list[GrowthRow]) -> float | None:
    """Slope of ``log b`` against ``n`` over the nondegenerate rows."""
    usable = [row for row in rows if not row.degenerate and row.b > 0]
    if len(usable) < 2:
        return None
    xs = np.array([row.n for row in usable], dtype=float)
    ys = np.array([math.log(row.b) for row in usable], dtype=float)
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def mahler_growth_experiment(
    system: AugmentedGroupSystem,
    rep: PeriodicRep,
    n_max: int,
    threads: int = DEFAULT_THREADS,
    n_min: int = 1,
) -> GrowthTable:
    """Torsion numbers ``b_{rho,rn}`` for ``n_min <= n <= n_max`` against ``M(D)``."""
    system = normalize(system)
    D = alexander_lin_polynomial(system, rep, threads)
    if D.is_zero():
        raise VanishingPolynomialError(
            "D is identically zero, so torsion growth has no Mahler measure to approach; "
            "a non-transitive amalgamated subgroup is the usual cause"
        )
    measure = mahler_measure(D)
    ns = list(range(n_min, n_max + 1))

    def one(n: int) -> GrowthRow:
        form = branched_homology(system, rep, n)
        b = form.torsion
        return GrowthRow(n, b, b ** (1.0 / n), form.free_rank, degenerate_n(D, n))

    rows = gather_map(one, ns, threads)
    table = GrowthTable(system.label, rep.N, rep.r, D, measure.value, measure.error, rows)
    table.slope = least_squares_slope(rows)
    skipped = [row.n for row in rows if row.degenerate]
    if skipped:
        table.notes.append(f"n = {skipped} are degenerate (D vanishes at an n-th root of unity) and left out of the fit")
    if table.rows:
        table.notes.append(f"final gap |b^(1/n) - M(D)| = {table.final_gap:.6g} at n = {table.rows[-1].n}")
    logger.info("growth experiment on %s: M(D) = %.12g, slope estimate %s", system.label, measure.value, table.growth_estimate)
    return table


def fibered_spectral_check(
    system: AugmentedGroupSystem, rep: PeriodicRep, D: LaurentPoly | None = None, tol: float = 1e-9
) -> CheckResult:
    """Largest root modulus of ``D``, ``r``-th root taken, against the declared growth rate."""
    statement = "max |root|^(1/r) <= growth rate of the monodromy"
    if system.growth is None or not system.fibered:
        reason = "no growth metadata" if system.growth is None else "system is not declared fibered"
        return CheckResult("spectral", "spectral", statement, SKIPPED, {"reason": reason})
    if D is None:
        D = alexander_lin_polynomial(normalize(system), rep)
    if D.is_zero():
        return CheckResult("spectral", "spectral", statement, SKIPPED, {"reason": "D is zero"})
    growth = float(system.growth)
    modulus = max_root_modulus(D)
    value = modulus.value ** (1.0 / rep.r) if modulus.value else 0.0
    ok = value <= growth + modulus.error + tol
    witness = {"root_modulus": value, "growth": growth, "equality": abs(value - growth) <= modulus.error + tol}
    return CheckResult("spectral", "spectral", statement, PASS if ok else FAIL, witness)
