import json
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from sympy.combinatorics import Permutation

from ..errors import RepresentationError
from ..groups import AugmentedGroupSystem, KernelPresentation
from ..laurent import LaurentPoly
from ..reps import PeriodicRep
from ..words import FreeWord, fox_derivative

Terms = dict[int, int]


@dataclass
class PolyMatrix:
    """A dense matrix of Laurent polynomials with optional row and column labels."""

    rows: list[list[LaurentPoly]]
    var: str = "s"
    row_labels: list[Hashable] = field(default_factory=list)
    col_labels: list[Hashable] = field(default_factory=list)

    def __post_init__(self):
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ValueError(f"ragged matrix with row lengths {sorted(widths)}")

    @classmethod
    def from_terms(
        cls,
        entries: Mapping[tuple[int, int], Terms],
        shape: tuple[int, int],
        var: str = "s",
        row_labels: Sequence[Hashable] = (),
        col_labels: Sequence[Hashable] = (),
    ) -> "PolyMatrix":
        n_rows, n_cols = shape
        zero = LaurentPoly.zero(var)
        rows = [[zero] * n_cols for _ in range(n_rows)]
        for (i, j), terms in entries.items():
            rows[i][j] = LaurentPoly.from_terms(terms, var)
        return cls(rows, var, list(row_labels), list(col_labels))

    @classmethod
    def identity(cls, n: int, var: str = "s") -> "PolyMatrix":
        one, zero = LaurentPoly.one(var), LaurentPoly.zero(var)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], var)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def transpose(self) -> "PolyMatrix":
        n_rows, n_cols = self.shape
        return PolyMatrix(
            [[self.rows[i][j] for i in range(n_rows)] for j in range(n_cols)],
            self.var,
            list(self.col_labels),
            list(self.row_labels),
        )

    def select_rows(self, indices: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([self.rows[i] for i in indices], self.var)

    def polynomial_rows(self) -> list[list[LaurentPoly]]:
        """Rows shifted by a power of ``var`` so no negative exponents remain."""
        out = []
        for row in self.rows:
            nonzero = [p.low for p in row if not p.is_zero()]
            k = min(nonzero) if nonzero else 0
            out.append([p.shift(-k) for p in row])
        return out

    def degree_bound(self) -> int:
        """Sum over rows of the largest entry degree, after shifting rows to polynomials."""
        total = 0
        for row in self.polynomial_rows():
            total += max((p.high for p in row if not p.is_zero()), default=0)
        return total

    def evaluate(self, value: int) -> list[list[int]]:
        return [[int(p.evaluate(value)) for p in row] for row in self.polynomial_rows()]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]" for row in self.rows)

    def to_json(self) -> dict:
        return {"var": self.var, "rows": [[p.to_json() for p in row] for row in self.rows]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def crowell_entries(
    kp: KernelPresentation, rep: PeriodicRep, wrap: int | None = None
) -> tuple[dict[tuple[int, int], Terms], tuple[int, int], list, list]:
    """Abelianized Crowell relations of the period-``r`` cover, as sparse terms.

    Rows are relator instances ``(template, nu, point)``, columns kernel
    generators ``(gen, nu, point)``. A letter ``a_mu`` lands in column block
    ``mu mod r`` with the factor ``s^(mu div r)``. With ``wrap = r*n`` indices are
    read mod ``wrap`` instead and no ``s`` factors appear.
    """
    N, r = rep.N, rep.r
    period = wrap or r
    gens = list(kp.generators)
    g_index = {g: k for k, g in enumerate(gens)}
    row_labels = [(t, nu, i) for t in range(len(kp.templates)) for nu in range(period) for i in range(N)]
    col_labels = [(g, nu, i) for g in gens for nu in range(period) for i in range(N)]
    entries: dict[tuple[int, int], Terms] = {}

    def add(row: int, gen: str, mu: int, point: int, sign: int) -> None:
        if wrap is None:
            block, power = mu % r, mu // r
        else:
            block, power = mu % wrap, 0
        col = (g_index[gen] * period + block) * N + point
        terms = entries.setdefault((row, col), {})
        terms[power] = terms.get(power, 0) + sign

    for t, template in enumerate(kp.templates):
        for nu in range(period):
            word = template.shift(nu)
            for start in range(N):
                row = (t * period + nu) * N + start
                cur = start
                for (gen, mu), e in word:
                    if gen not in g_index:
                        raise RepresentationError(f"no image for generator {gen!r}")
                    images = rep.image(gen, mu).array_form
                    if e == 1:
                        add(row, gen, mu, cur, 1)
                        cur = images[cur]
                    else:
                        cur = images.index(cur)
                        add(row, gen, mu, cur, -1)
    shape = (len(row_labels), len(col_labels))
    return entries, shape, row_labels, col_labels


def twisted_jacobian(kp: KernelPresentation, rep: PeriodicRep) -> PolyMatrix:
    """Presentation matrix of the twisted module over ``Z[s^+-1]``, ``s = t^r``."""
    rep.verify(kp)
    entries, shape, rows, cols = crowell_entries(kp, rep)
    return PolyMatrix.from_terms(entries, shape, "s", rows, cols)


def fox_jacobian(
    system: AugmentedGroupSystem, rho: Mapping[str, Permutation], omit: str | None = None
) -> PolyMatrix:
    """Fox Jacobian evaluated by ``g -> t^eps(g) P(rho(g))``, one column block removed.

    ``P(p)`` has a one in row ``i``, column ``p(i)``, so ``P(pq) = P(p)P(q)``
    under sympy's left-to-right product.
    """
    omit = system.distinguished if omit is None else omit
    gens = [g for g in system.generators if g != omit]
    n = next(iter(rho.values())).size if rho else 1

    def image(word: FreeWord) -> Permutation:
        result = Permutation(list(range(n)))
        for gen, e in word:
            p = rho[gen]
            result = result * (p if e == 1 else ~p)
        return result

    entries: dict[tuple[int, int], Terms] = {}
    for k, rel in enumerate(system.relators):
        for j, gen in enumerate(gens):
            for word, c in fox_derivative(rel, gen):
                degree = word.degree(system.epsilon)
                arr = image(word).array_form
                for i in range(n):
                    terms = entries.setdefault((k * n + i, j * n + arr[i]), {})
                    terms[degree] = terms.get(degree, 0) + c
    shape = (len(system.relators) * n, len(gens) * n)
    return PolyMatrix.from_terms(entries, shape, "t")
