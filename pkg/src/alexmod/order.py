import logging
from fractions import Fraction
from itertools import combinations

import sympy
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..errors import InterpolationError
from ..laurent import LaurentPoly, divides, gcd
from ..workers import DEFAULT_THREADS, gather_map
from .matrix import PolyMatrix

logger = logging.getLogger(__name__)

INTERPOLATION_LIMIT = 200
SCREEN_POINTS = (2, 3, 5, 7)


def evaluation_points(count: int) -> list[int]:
    """``0, 1, -1, 2, -2, ...``"""
    points = [0]
    k = 1
    while len(points) < count:
        points.append(k)
        if len(points) < count:
            points.append(-k)
        k += 1
    return points


def integer_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    return int(DomainMatrix([[ZZ(v) for v in row] for row in rows], (n, n), ZZ).det())


def newton_coefficients(xs: list[int], ys: list[int]) -> list[int]:
    """Integer coefficients (constant first) of the interpolating polynomial."""
    n = len(xs)
    table = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[k]) + table[k]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [shifted[i] - xs[k] * coeffs[i] for i in range(n)]
        coeffs[0] += table[k]
    if any(c.denominator != 1 for c in coeffs):
        raise InterpolationError("interpolated determinant has non-integer coefficients")
    return [int(c) for c in coeffs]


def determinant_interpolation(m: PolyMatrix, threads: int = DEFAULT_THREADS) -> LaurentPoly:
    """Determinant by exact evaluation at ``degree_bound + 1`` integer points."""
    n_rows, n_cols = m.shape
    if n_rows != n_cols:
        raise ValueError(f"determinant of a non-square {n_rows}x{n_cols} matrix")
    bound = m.degree_bound()
    xs = evaluation_points(bound + 1)
    ys = gather_map(lambda x: integer_det(m.evaluate(x)), xs, threads)
    coeffs = newton_coefficients(xs, ys)
    return LaurentPoly(coeffs, 0, m.var)


def determinant_bareiss(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free elimination over ``Z[var]``."""
    n_rows, n_cols = m.shape
    if n_rows != n_cols:
        raise ValueError(f"determinant of a non-square {n_rows}x{n_cols} matrix")
    if n_rows == 0:
        return LaurentPoly.one(m.var)
    domain = ZZ[sympy.Symbol(m.var)]
    ring = domain.ring
    rows = [
        [ring.from_dict({(d,): c for d, c in p.terms().items()}) for p in row]
        for row in m.polynomial_rows()
    ]
    det = DomainMatrix(rows, (n_rows, n_cols), domain).det()
    return LaurentPoly.from_terms({k[0]: int(c) for k, c in det.terms()}, m.var)


def determinant(m: PolyMatrix, threads: int = DEFAULT_THREADS, method: str = "auto") -> LaurentPoly:
    """Determinant up to a power of ``var`` (rows are shifted to polynomials first)."""
    if method == "auto":
        method = "interpolation" if m.degree_bound() <= INTERPOLATION_LIMIT else "bareiss"
    logger.debug("determinant of %s matrix by %s", m.shape, method)
    if method == "interpolation":
        return determinant_interpolation(m, threads)
    if method == "bareiss":
        return determinant_bareiss(m)
    raise ValueError(f"unknown determinant method {method!r}")


def order_delta0(m: PolyMatrix, threads: int = DEFAULT_THREADS, method: str = "auto") -> LaurentPoly:
    """Gcd of the maximal minors of a relations-by-generators matrix, canonical form.

    Fewer relations than generators leaves a free summand, so the order is zero.
    """
    n_rows, n_cols = m.shape
    if n_cols == 0:
        return LaurentPoly.one(m.var)
    if n_rows < n_cols:
        logger.debug("%d relations for %d generators: order is zero", n_rows, n_cols)
        return LaurentPoly.zero(m.var)
    if n_rows == n_cols:
        return determinant(m, threads, method).normalized()
    return minor_gcd(m, threads, method)


def minor_gcd(m: PolyMatrix, threads: int = DEFAULT_THREADS, method: str = "auto") -> LaurentPoly:
    """Running gcd over maximal minors, stopping as soon as it is a unit.

    Once the gcd is nonzero, a minor whose integer values at a few points are
    all divisible by the gcd's values is set aside without computing its
    determinant. Only minors that fail the screen lower the gcd; the set-aside
    ones are confirmed by exact division at the end.
    """
    n_rows, n_cols = m.shape
    result = LaurentPoly.zero(m.var)
    deferred: list[PolyMatrix] = []
    for seen, idx in enumerate(combinations(range(n_rows), n_cols), start=1):
        sub = m.select_rows(idx)
        if not result.is_zero() and _divides_at_points(sub, result):
            deferred.append(sub)
            continue
        result = _fold(result, determinant(sub, threads, method))
        if result.is_unit():
            logger.debug("minor gcd reached a unit after %d minors", seen)
            return result
    logger.debug("confirming %d screened minors", len(deferred))
    for sub in deferred:
        minor = determinant(sub, threads, method)
        if not divides(result, minor):
            result = _fold(result, minor)
            if result.is_unit():
                break
    return result


def _fold(result: LaurentPoly, minor: LaurentPoly) -> LaurentPoly:
    return result if minor.is_zero() else gcd(result, minor)


def _divides_at_points(sub: PolyMatrix, divisor: LaurentPoly) -> bool:
    for x in SCREEN_POINTS:
        d = int(divisor.evaluate(x))
        if d and integer_det(sub.evaluate(x)) % d:
            return False
    return True
