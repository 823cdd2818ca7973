import logging
from dataclasses import dataclass
from math import gcd, prod

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

EXACT_SNF_LIMIT = 60


@dataclass
class IntMatrix:
    rows: list[list[int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def transpose(self) -> "IntMatrix":
        n_rows, n_cols = self.shape
        return IntMatrix([[self.rows[i][j] for i in range(n_rows)] for j in range(n_cols)])

    def det(self) -> int:
        n_rows, n_cols = self.shape
        if n_rows != n_cols:
            raise ValueError(f"determinant of a non-square {n_rows}x{n_cols} matrix")
        if n_rows == 0:
            return 1
        return int(DomainMatrix([[ZZ(v) for v in row] for row in self.rows], self.shape, ZZ).det())


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d1 | d2 | ...`` of the nonzero diagonal, plus shape data.

    The cokernel ``Z^cols / rowspace`` is ``Z^free_rank`` plus ``Z/d_i``.
    """

    invariant_factors: tuple[int, ...]
    rank: int
    cols: int

    @property
    def free_rank(self) -> int:
        return self.cols - self.rank

    @property
    def torsion(self) -> int:
        return prod(d for d in self.invariant_factors if d > 1)

    def torsion_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            v = a[i][j]
            if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_diagonal(rows: list[list[int]], modulus: int | None = None) -> list[int]:
    """Diagonal of a Smith form by pivoting on the smallest entry.

    With ``modulus`` every entry is kept reduced mod ``modulus``; callers must
    know that ``modulus * Z^n`` lies in the row lattice.
    """
    a = [list(row) for row in rows]
    if not a or not a[0]:
        return []

    def reduce(v: int) -> int:
        if modulus is None:
            return v
        v %= modulus
        return v - modulus if 2 * v > modulus else v

    if modulus is not None:
        a = [[reduce(v) for v in row] for row in a]
    m, n = len(a), len(a[0])
    diag: list[int] = []
    for t in range(min(m, n)):
        while True:
            piv = _pivot(a, t)
            if piv is None:
                return diag + [0] * (min(m, n) - t)
            i, j = piv
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [reduce(x - q * y) for x, y in zip(a[i], a[t])]
                    done = done and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] = reduce(row[j] - q * row[t])
                    done = done and a[t][j] == 0
            if done:
                bad = next(
                    (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                    None,
                )
                if bad is None:
                    break
                a[t] = [reduce(x + y) for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def _exact(m: IntMatrix) -> tuple[int, ...]:
    factors = invariant_factors(Matrix(m.rows), domain=ZZ)
    return tuple(sorted(abs(int(f)) for f in factors if f != 0))


def _modular(m: IntMatrix, d: int) -> tuple[int, ...]:
    diag = smith_diagonal(m.rows, d)
    return tuple(sorted(gcd(e, d) for e in diag))


def smith_normal_form(m: IntMatrix, method: str = "auto") -> SmithForm:
    """Invariant factors of ``m``.

    ``exact`` uses sympy; ``modular`` works mod ``|det|`` and needs a square
    nonsingular matrix. ``auto`` picks modular above ``EXACT_SNF_LIMIT`` rows
    when the determinant is nonzero.
    """
    n_rows, n_cols = m.shape
    if n_rows == 0 or n_cols == 0:
        return SmithForm((), 0, n_cols)
    if method == "auto":
        method = "exact"
        if n_rows == n_cols and n_rows > EXACT_SNF_LIMIT:
            d = abs(m.det())
            if d:
                logger.debug("modular Smith form of %dx%d matrix mod %d", n_rows, n_cols, d)
                factors = _modular(m, d)
                return SmithForm(factors, len(factors), n_cols)
    if method == "modular":
        d = abs(m.det())
        if d == 0:
            raise ValueError("modular Smith form needs a nonsingular square matrix")
        factors = _modular(m, d)
        return SmithForm(factors, len(factors), n_cols)
    if method == "elimination":
        factors = tuple(sorted(f for f in smith_diagonal(m.rows) if f))
        return SmithForm(factors, len(factors), n_cols)
    if method != "exact":
        raise ValueError(f"unknown Smith form method {method!r}")
    factors = _exact(m)
    return SmithForm(factors, len(factors), n_cols)
