import logging
from dataclasses import dataclass

import mpmath

from ..errors import RootFindingError
from .poly import LaurentPoly

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
START_DPS = 30
MAX_DPS = 480


@dataclass(frozen=True)
class CertifiedRoot:
    """An approximate root with a disk radius known to contain exactly one true root."""

    value: complex
    radius: float
    multiplicity: int = 1

    @property
    def modulus_bounds(self) -> tuple[float, float]:
        m = abs(self.value)
        return max(m - self.radius, 0.0), m + self.radius


@dataclass(frozen=True)
class MahlerMeasure:
    value: float
    error: float

    def __float__(self) -> float:
        return self.value


def _inclusion_radii(coeffs: list, roots: list) -> list:
    d = len(roots)
    lead = abs(coeffs[0])
    radii = []
    for i, z in enumerate(roots):
        denom = lead
        for j, w in enumerate(roots):
            if j != i:
                denom *= abs(z - w)
        if denom == 0:
            return [mpmath.inf] * d
        radii.append(d * abs(mpmath.polyval(coeffs, z)) / denom)
    return radii


def _disjoint(roots: list, radii: list) -> bool:
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                return False
    return True


def _squarefree_roots(coeffs: list[int], multiplicity: int, tol: float) -> list[CertifiedRoot]:
    dps = START_DPS
    residuals: list[float] = []
    while dps <= MAX_DPS:
        with mpmath.workdps(dps):
            try:
                roots = mpmath.polyroots(coeffs, maxsteps=20 * len(coeffs) + 50, extraprec=2 * dps)
            except mpmath.libmp.NoConvergence:
                logger.debug("polyroots did not converge at %d digits", dps)
                dps *= 2
                continue
            roots = roots if isinstance(roots, list) else [roots]
            radii = _inclusion_radii(coeffs, roots)
            residuals = [float(abs(mpmath.polyval(coeffs, z))) for z in roots]
            if _disjoint(roots, radii) and max(radii, default=0) < tol:
                return [
                    CertifiedRoot(complex(z), float(r), multiplicity) for z, r in zip(roots, radii)
                ]
        logger.debug("root disks not certified at %d digits, escalating", dps)
        dps *= 2
    raise RootFindingError(
        f"could not certify the roots of a degree {len(coeffs) - 1} factor", residuals
    )


def certified_roots(f: LaurentPoly, tol: float = DEFAULT_TOLERANCE) -> list[CertifiedRoot]:
    """Roots of ``f`` (nonzero roots only) with disjoint inclusion disks, grouped by square-free factor."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    _, factors = f.normalized().to_poly().sqf_list()
    out: list[CertifiedRoot] = []
    for factor, mult in factors:
        if factor.degree() < 1:
            continue
        coeffs = [int(c) for c in factor.all_coeffs()]
        out.extend(_squarefree_roots(coeffs, mult, tol / 10))
    return out


def mahler_measure(f: LaurentPoly, tol: float = DEFAULT_TOLERANCE) -> MahlerMeasure:
    """``|lc| * prod max(|root|, 1)`` with a bound on the distance to the true value."""
    if f.is_zero():
        raise ValueError("Mahler measure of the zero polynomial")
    g = f.normalized()
    lead = abs(g.coeffs[-1])
    value = mpmath.mpf(lead)
    lo = mpmath.mpf(lead)
    hi = mpmath.mpf(lead)
    for root in certified_roots(g, tol):
        m = abs(mpmath.mpc(root.value))
        a, b = root.modulus_bounds
        value *= max(m, 1) ** root.multiplicity
        lo *= max(mpmath.mpf(a), 1) ** root.multiplicity
        hi *= max(mpmath.mpf(b), 1) ** root.multiplicity
    error = max(hi - value, value - lo)
    return MahlerMeasure(float(value), float(error))


def max_root_modulus(f: LaurentPoly, tol: float = DEFAULT_TOLERANCE) -> MahlerMeasure:
    """Largest root modulus of ``f`` and its error bound; ``0`` for monomials."""
    roots = certified_roots(f, tol)
    if not roots:
        return MahlerMeasure(0.0, 0.0)
    best = max(roots, key=lambda r: abs(r.value))
    return MahlerMeasure(abs(best.value), best.radius)
