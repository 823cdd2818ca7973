import logging
from dataclasses import dataclass, field
from typing import Any

from sympy.combinatorics import Permutation

from ..groups import AugmentedGroupSystem, kernel_presentation, normalize, untwisted_alexander
from ..laurent import (
    LaurentPoly,
    divides,
    exact_quotient,
    is_reciprocal,
    max_root_modulus,
    multiplicity,
    power_transform,
)
from ..reps import PeriodicRep, extends_over_G, to_cycles
from ..words import schreier_rewrite
from ..workers import DEFAULT_THREADS
from .matrix import PolyMatrix, twisted_jacobian
from .order import determinant, order_delta0

logger = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    key: str
    name: str
    statement: str
    status: str
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "name": self.name,
            "statement": self.statement,
            "status": self.status,
            "witness": self.witness,
        }


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def s_minus_one() -> LaurentPoly:
    return LaurentPoly([-1, 1])


def t_minus_one() -> LaurentPoly:
    return LaurentPoly([-1, 1], var="t")


def char_poly(x: Permutation) -> LaurentPoly:
    """``det(t P_X - I)`` as a polynomial in ``t``."""
    n = x.size
    arr = x.array_form
    entries = {}
    for i in range(n):
        entries[(i, arr[i])] = {1: 1}
        entries.setdefault((i, i), {})
        entries[(i, i)][0] = entries[(i, i)].get(0, 0) - 1
    return determinant(PolyMatrix.from_terms(entries, (n, n), "t"))


def extended_rep(system: AugmentedGroupSystem, rep: PeriodicRep, x: Permutation) -> dict[str, Permutation]:
    """Images of the generators of the normalized system for the extension with ``x -> X``."""
    rho = {system.distinguished: x}
    for gen in system.base_generators:
        rho[gen] = rep.image(gen, 0)
    return rho


def lin_polynomial(system: AugmentedGroupSystem, rep: PeriodicRep, x: Permutation) -> LaurentPoly:
    """``W(t) (t - 1) / det(t P_X - I)`` for the extension of ``rep`` with ``x -> X``."""
    from .pipeline import wada_invariant

    system = normalize(system)
    w = wada_invariant(system, extended_rep(system, rep, x))
    if w.is_zero():
        return w
    return exact_quotient(w * t_minus_one(), char_poly(x)).normalized()


def restricted_orders(
    system: AugmentedGroupSystem, rep: PeriodicRep, threads: int = DEFAULT_THREADS
) -> list[tuple[list[int], LaurentPoly]]:
    kp = kernel_presentation(system)
    out = []
    for block in rep.orbits():
        sub = rep.restrict(block)
        out.append((block, order_delta0(twisted_jacobian(kp, sub), threads)))
    return out


def run_checks(
    system: AugmentedGroupSystem,
    rep: PeriodicRep,
    D: LaurentPoly,
    extension: Permutation | None = None,
    extension_known: bool = False,
    threads: int = DEFAULT_THREADS,
) -> list[CheckResult]:
    """Every structural check that the system's metadata makes applicable.

    Checks without the metadata they need are reported as skipped.
    """
    system = normalize(system)
    N, r = rep.N, rep.r
    span = D.span
    results: list[CheckResult] = []

    # (a) the classical polynomial's r-th power transform divides D
    delta = untwisted_alexander(system)
    statement = "Delta^(r)(s) divides D(s)"
    if delta.is_zero():
        results.append(CheckResult("a", "divides", statement, SKIPPED, {"reason": "Delta is zero"}))
    else:
        delta_r = power_transform(delta, r)
        ok = divides(delta_r, D)
        witness = {"divisor": str(delta_r)}
        if ok and not D.is_zero():
            witness["quotient"] = str(exact_quotient(D, delta_r).normalized())
        results.append(CheckResult("a", "divides", statement, _verdict(ok), witness))

    # (b) reciprocality for 3-manifold groups with peripheral x
    statement = "D(s) is reciprocal"
    if not system.manifold:
        results.append(CheckResult("b", "reciprocal", statement, SKIPPED, {"reason": "no manifold metadata"}))
    elif D.is_zero():
        results.append(CheckResult("b", "reciprocal", statement, SKIPPED, {"reason": "D is zero"}))
    else:
        ok = is_reciprocal(D)
        results.append(
            CheckResult("b", "reciprocal", statement, _verdict(ok), {"reversed": str(D.reciprocal().normalized())})
        )

    # (c) (s - 1)^(N + T - 2) divides D
    statement = "(s - 1)^(N + T - 2) divides D(s)"
    if not system.manifold or system.longitude is None:
        reason = "no manifold metadata" if not system.manifold else "no longitude"
        results.append(CheckResult("c", "peripheral", statement, SKIPPED, {"reason": reason}))
    elif system.longitude_abelian_only and not rep.has_abelian_image():
        results.append(
            CheckResult(
                "c", "peripheral", statement, SKIPPED, {"reason": "longitude is only valid for abelian images"}
            )
        )
    else:
        longitude = schreier_rewrite(system.longitude, system.epsilon, system.distinguished)
        T = rep.longitude_orbits(longitude)
        required = N + T - 2
        if D.is_zero():
            results.append(CheckResult("c", "peripheral", statement, PASS, {"T": T, "required": required}))
        else:
            found = multiplicity(D, s_minus_one())
            results.append(
                CheckResult(
                    "c",
                    "peripheral",
                    statement,
                    _verdict(found >= required),
                    {"T": T, "required": required, "multiplicity": found},
                )
            )

    # (d) D = Delta_rho^(r) (s - 1)^(N - 1) when rho extends over G
    statement = "D(s) = Delta_rho^(r)(s) (s - 1)^(N - 1)"
    if not extension_known:
        extension = extends_over_G(rep)
    if not rep.is_transitive():
        results.append(
            CheckResult("d", "classicfactor", statement, SKIPPED, {"reason": "representation is not transitive"})
        )
    elif extension is None:
        results.append(
            CheckResult("d", "classicfactor", statement, SKIPPED, {"reason": "representation does not extend over G"})
        )
    else:
        lin = lin_polynomial(system, rep, extension)
        if lin.is_zero():
            expected = LaurentPoly.zero()
        else:
            expected = (power_transform(lin, r) * s_minus_one() ** (N - 1)).normalized()
        ok = expected == D.normalized()
        results.append(
            CheckResult(
                "d",
                "classicfactor",
                statement,
                _verdict(ok),
                {"X": to_cycles(extension), "Delta_rho": str(lin), "expected": str(expected)},
            )
        )

    # (e) HNN degree bound
    statement = "deg D <= N rk(U)"
    if system.hnn is None:
        results.append(CheckResult("e", "hnn-bound", statement, SKIPPED, {"reason": "no HNN data"}))
    else:
        bound = N * len(system.hnn.amalgamated)
        ok = D.is_zero() or span <= bound
        results.append(CheckResult("e", "hnn-bound", statement, _verdict(ok), {"degree": span, "bound": bound}))

    # (f) genus bound, equality for fibered knots
    statement = "deg D <= 2 N genus" + (", with equality" if system.fibered else "")
    if system.genus is None:
        results.append(CheckResult("f", "genus-bound", statement, SKIPPED, {"reason": "no genus metadata"}))
    elif D.is_zero():
        results.append(CheckResult("f", "genus-bound", statement, SKIPPED, {"reason": "D is zero"}))
    else:
        bound = 2 * N * system.genus
        ok = span == bound if system.fibered else span <= bound
        results.append(CheckResult("f", "genus-bound", statement, _verdict(ok), {"degree": span, "bound": bound}))

    # (g) root modulus bound for abelian images
    statement = "max |root|^(1/r) <= M^(2n)"
    if not rep.has_abelian_image():
        results.append(CheckResult("g", "abelian-bound", statement, SKIPPED, {"reason": "image is not abelian"}))
    elif D.is_zero():
        results.append(CheckResult("g", "abelian-bound", statement, SKIPPED, {"reason": "D is zero"}))
    else:
        longest = max(len(rel) for rel in system.relators)
        bound = float(longest) ** (2 * len(system.base_generators))
        modulus = max_root_modulus(D)
        root = modulus.value ** (1.0 / r)
        ok = root <= bound * (1 + 1e-12) + modulus.error
        results.append(
            CheckResult("g", "abelian-bound", statement, _verdict(ok), {"root_modulus": root, "bound": bound})
        )

    # (h) a non-transitive U_nu forces D = 0
    statement = "some U_nu is not transitive, so D(s) = 0"
    if system.hnn is None or not system.hnn.amalgamated:
        results.append(CheckResult("h", "vanish", statement, SKIPPED, {"reason": "no HNN data"}))
    elif not rep.is_transitive():
        results.append(CheckResult("h", "vanish", statement, SKIPPED, {"reason": "representation is not transitive"}))
    else:
        offending = None
        for nu in range(r):
            orbits = rep.subgroup_orbits(w.shift(nu) for w in system.hnn.amalgamated)
            if len(orbits) > 1:
                offending = (nu, orbits)
                break
        if offending is None:
            results.append(
                CheckResult("h", "vanish", statement, SKIPPED, {"reason": "every U_nu acts transitively"})
            )
        else:
            nu, orbits = offending
            results.append(
                CheckResult("h", "vanish", statement, _verdict(D.is_zero()), {"nu": nu, "orbits": orbits})
            )

    # (i) free product splitting for reducible representations
    statement = "D(s) is the product over K-orbits"
    if rep.is_transitive():
        results.append(CheckResult("i", "reducible", statement, SKIPPED, {"reason": "representation is transitive"}))
    else:
        parts = restricted_orders(system, rep, threads)
        product = LaurentPoly.one()
        for _, part in parts:
            product = product * part
        ok = product.normalized() == D.normalized()
        witness = {"factors": {str(block): str(part) for block, part in parts}}
        results.append(CheckResult("i", "reducible", statement, _verdict(ok), witness))

    for check in results:
        logger.debug("check %s (%s): %s", check.key, check.name, check.status)
    return results
