import logging
import random
from dataclasses import dataclass, field
from typing import Any

from sympy import factor, sstr
from sympy.combinatorics import Permutation

from ..alexmod import FAIL, PASS, CheckResult, InvariantReport, alexander_lin, alexander_lin_polynomial
from ..covers import branched_homology, fibered_spectral_check, mahler_growth_experiment
from ..groups import AugmentedGroupSystem, kernel_presentation, load_system, normalize, untwisted_alexander
from ..reps import PeriodicRep, cyclic_reps_mod_p, enumerate_periodic, exponent_vector, load_rep
from .config import RunConfig
from .corpus import corpus, resolve

logger = logging.getLogger(__name__)

FUZZ_ROUNDS = 3


@dataclass
class Report:
    """What a command produced: structured data, a human summary and any failed checks."""

    command: str
    data: dict[str, Any] = field(default_factory=dict)
    summary: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    failed: list[str] = field(default_factory=list)
    csv: str | None = None


def factored(poly) -> str:
    if poly.is_zero():
        return "0"
    return sstr(factor(poly.to_expr()))


def _load(config: RunConfig) -> AugmentedGroupSystem:
    return normalize(load_system(resolve(config.input)))


def _reps(config: RunConfig, system: AugmentedGroupSystem, report: Report) -> list[PeriodicRep]:
    if config.rep is not None:
        rep = load_rep(resolve(config.rep))
        report.notes.append(f"representation read from {config.rep}")
        return [rep]
    kp = kernel_presentation(system)
    result = enumerate_periodic(
        kp, config.N, config.r, config.limit, config.raw, config.allow_reducible, config.threads
    )
    report.notes.extend(result.notes)
    report.notes.append(f"{len(result.reps)} representations with N={config.N}, r={config.r}")
    return result.reps


def _invariance(system: AugmentedGroupSystem, rep: PeriodicRep, D, seed: int, threads: int) -> CheckResult:
    """``D`` of random shifts and conjugates of ``rep`` against ``D`` itself."""
    rng = random.Random(seed)
    trials = []
    ok = True
    for _ in range(FUZZ_ROUNDS):
        points = list(range(rep.N))
        rng.shuffle(points)
        k = rng.randrange(rep.r)
        other = rep.sigma(k).conjugate(Permutation(points))
        value = alexander_lin_polynomial(system, other, threads)
        same = value.normalized() == D.normalized()
        ok = ok and same
        trials.append({"shift": k, "conjugator": [p + 1 for p in points], "equal": same})
    statement = "D is unchanged by shifts and simultaneous conjugation"
    return CheckResult("invariance", "invariance", statement, PASS if ok else FAIL, {"seed": seed, "trials": trials})


def _invariant_entry(report_: InvariantReport) -> dict:
    entry = report_.to_json()
    entry["factored"] = factored(report_.D)
    return entry


def _summarize_invariant(inv: InvariantReport, rep: PeriodicRep, report: Report) -> None:
    report.summary.append(f"rep {rep.dumps()}")
    report.summary.append(f"  D = {inv.D}")
    report.summary.append(f"    = {factored(inv.D)}")
    report.summary.append(f"  degree {inv.degree}, transitive {inv.transitive}, extends over G {inv.extends}")
    for check in inv.checks:
        report.summary.append(f"  ({check.key}) {check.name:<14} {check.status:<8} {check.statement}")
        if check.failed:
            report.failed.append(f"{check.key} {check.name}")


class Runner:
    def run(self, config: RunConfig) -> Report:
        handler = getattr(self, "_" + config.command)
        report = Report(config.command)
        handler(config, report)
        return report

    def _corpus(self, config: RunConfig, report: Report) -> None:
        names = corpus()
        report.data = {"corpus": names}
        report.summary.extend(names)

    def _enumerate(self, config: RunConfig, report: Report) -> None:
        system = _load(config)
        kp = kernel_presentation(system)
        result = enumerate_periodic(
            kp, config.N, config.r, config.limit, config.raw, config.allow_reducible, config.threads
        )
        report.notes.extend(result.notes)
        report.data = {
            "system": system.label,
            "N": config.N,
            "r": config.r,
            "complete": result.complete,
            "explored": result.explored,
            "count": len(result.reps),
            "reps": [rep.to_json() for rep in result.reps],
        }
        report.summary.append(
            f"{len(result.reps)} representations of {system.label} with N={config.N}, r={config.r}"
            + ("" if result.complete else " (partial)")
        )
        report.summary.extend(rep.dumps() for rep in result.reps)

    def _invariant(self, config: RunConfig, report: Report, fuzz: bool = False) -> None:
        system = _load(config)
        entries = []
        for rep in _reps(config, system, report):
            inv = alexander_lin(system, rep, config.allow_reducible, config.threads)
            if fuzz:
                inv.checks.append(_invariance(system, rep, inv.D, config.seed, config.threads))
                inv.checks.append(fibered_spectral_check(system, rep, inv.D))
            report.notes.extend(inv.notes)
            entries.append(_invariant_entry(inv))
            _summarize_invariant(inv, rep, report)
        report.data = {"system": system.label, "reps": entries}

    def _checks(self, config: RunConfig, report: Report) -> None:
        self._invariant(config, report, fuzz=True)

    def _torsion(self, config: RunConfig, report: Report) -> None:
        system = _load(config)
        entries = []
        for rep in _reps(config, system, report):
            form = branched_homology(system, rep, config.n)
            entries.append(
                {
                    "rep": rep.to_json(),
                    "n": config.n,
                    "torsion": str(form.torsion),
                    "free_rank": form.free_rank,
                    "invariant_factors": [str(d) for d in form.torsion_factors()],
                }
            )
            report.summary.append(f"rep {rep.dumps()}")
            report.summary.append(
                f"  n={config.n}: torsion {form.torsion}, free rank {form.free_rank}, "
                f"factors {list(form.torsion_factors())}"
            )
        report.data = {"system": system.label, "results": entries}

    def _mahler(self, config: RunConfig, report: Report) -> None:
        system = _load(config)
        tables = []
        csv_parts = []
        for rep in _reps(config, system, report):
            table = mahler_growth_experiment(system, rep, config.n_max, config.threads)
            spectral = fibered_spectral_check(system, rep, table.D)
            if spectral.failed:
                report.failed.append("spectral")
            entry = table.to_json()
            entry["spectral"] = spectral.to_json()
            tables.append(entry)
            csv_parts.append(table.to_csv())
            report.notes.extend(table.notes)
            report.summary.append(f"rep {rep.dumps()}")
            report.summary.append(f"  D = {table.D}, M(D) = {table.mahler:.12g} (+- {table.mahler_error:.2g})")
            for row in table.rows:
                flag = "  degenerate" if row.degenerate else ""
                report.summary.append(f"  n={row.n:<4} b={row.b}  b^(1/n)={row.b_pow:.9f}{flag}")
            if table.growth_estimate is not None:
                report.summary.append(f"  exp(slope of log b) = {table.growth_estimate:.9f}")
            report.summary.append(f"  spectral check: {spectral.status}")
        report.data = {"system": system.label, "tables": tables}
        report.csv = "".join(csv_parts)

    def _cyclic(self, config: RunConfig, report: Report) -> None:
        system = _load(config)
        result = cyclic_reps_mod_p(system, config.p, config.r)
        report.notes.extend(result.notes)
        delta = untwisted_alexander(system)
        report.data = {
            "system": system.label,
            "p": config.p,
            "r": config.r,
            "Delta": str(delta),
            "resultant": str(result.gate.resultant),
            "gate": result.gate.passes,
            "nullity": result.nullity,
            "exponent_vectors": [list(exponent_vector(rep)) for rep in result.reps],
        }
        report.summary.append(f"Delta = {delta}")
        report.summary.append(f"|Res(Delta, t^{config.r} - 1)| = {result.gate.resultant}")
        report.summary.append(f"{len(result.reps)} cyclic representations mod {config.p}")
        report.summary.extend(str(exponent_vector(rep)) for rep in result.reps)
