import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from sympy.combinatorics import Permutation, PermutationGroup

from ..errors import RepresentationError
from ..groups import KernelPresentation
from ..words import KernelWord
from .permutation import from_cycles, identity, to_cycles

Table = Mapping[str, tuple[Permutation, ...]]


@dataclass(frozen=True)
class PeriodicRep:
    """A representation of the kernel into ``S_N`` with ``sigma^r rho = rho``.

    ``table[a][nu]`` is the image of ``a_nu`` for ``0 <= nu < r``; every other
    index is read mod ``r``.
    """

    N: int
    r: int
    table: Table = field(hash=False)

    def __post_init__(self):
        if self.N < 1 or self.r < 1:
            raise RepresentationError(f"need N >= 1 and r >= 1, got N={self.N}, r={self.r}")
        for gen, row in self.table.items():
            if len(row) != self.r:
                raise RepresentationError(
                    f"generator {gen!r} has {len(row)} images, expected r={self.r}"
                )
            for p in row:
                if p.size != self.N:
                    raise RepresentationError(f"image of {gen!r} has degree {p.size}, expected {self.N}")

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(self.table)

    def image(self, gen: str, nu: int) -> Permutation:
        try:
            return self.table[gen][nu % self.r]
        except KeyError:
            raise RepresentationError(f"no image for generator {gen!r}") from None

    def evaluate(self, word: KernelWord) -> Permutation:
        result = identity(self.N)
        for (gen, nu), exp in word:
            p = self.image(gen, nu)
            result = result * (p if exp == 1 else ~p)
        return result

    def permutations(self) -> list[Permutation]:
        return [p for row in self.table.values() for p in row]

    def key(self) -> tuple:
        """Sort key; equal keys mean equal tables."""
        return tuple((g, tuple(tuple(p.array_form) for p in row)) for g, row in self.table.items())

    def __lt__(self, other: "PeriodicRep") -> bool:
        return (self.N, self.r, self.key()) < (other.N, other.r, other.key())

    # the shift and its relatives

    def sigma(self, k: int = 1) -> "PeriodicRep":
        """``(sigma^k rho)(a_nu) = rho(a_{nu+k})``."""
        table = {g: tuple(row[(nu + k) % self.r] for nu in range(self.r)) for g, row in self.table.items()}
        return PeriodicRep(self.N, self.r, table)

    def conjugate(self, s: Permutation) -> "PeriodicRep":
        """Simultaneous conjugation ``p -> s^-1 p s`` of every entry."""
        table = {g: tuple(~s * p * s for p in row) for g, row in self.table.items()}
        return PeriodicRep(self.N, self.r, table)

    def with_period(self, period: int) -> "PeriodicRep":
        """The same representation declared at a multiple of its period."""
        if period % self.r:
            raise RepresentationError(f"period {period} is not a multiple of {self.r}")
        table = {g: tuple(row[nu % self.r] for nu in range(period)) for g, row in self.table.items()}
        return PeriodicRep(self.N, period, table)

    def minimal_period(self) -> int:
        for d in range(1, self.r + 1):
            if self.r % d == 0 and self.sigma(d) == self:
                return d
        return self.r

    # orbits

    def orbits(self) -> list[list[int]]:
        """K-orbits on the points, 1-based, sorted."""
        perms = self.permutations() or [identity(self.N)]
        group = PermutationGroup(perms)
        return sorted(sorted(i + 1 for i in orb) for orb in group.orbits())

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def has_abelian_image(self) -> bool:
        return PermutationGroup(self.permutations() or [identity(self.N)]).is_abelian

    def restrict(self, block: Iterable[int]) -> "PeriodicRep":
        """The summand on one invariant block (1-based points), relabelled in increasing order."""
        points = sorted(int(i) - 1 for i in block)
        index = {p: i for i, p in enumerate(points)}
        table = {}
        for g, row in self.table.items():
            images = []
            for p in row:
                arr = p.array_form
                if any(arr[i] not in index for i in points):
                    raise RepresentationError(f"block {sorted(block)} is not invariant")
                images.append(Permutation([index[arr[i]] for i in points]))
            table[g] = tuple(images)
        return PeriodicRep(len(points), self.r, table)

    def subgroup_orbits(self, words: Iterable[KernelWord]) -> list[list[int]]:
        """Orbits of the subgroup generated by the images of ``words``."""
        perms = [self.evaluate(w) for w in words] or [identity(self.N)]
        return sorted(sorted(i + 1 for i in orb) for orb in PermutationGroup(perms).orbits())

    def longitude_orbits(self, longitude: KernelWord) -> int:
        """``T``: the number of orbits of the cyclic group generated by the longitude's image."""
        return self.evaluate(longitude).cycles

    # checks

    def failures(self, kp: KernelPresentation) -> list[tuple[int, int]]:
        """``(template, nu)`` pairs whose relator instance is not sent to the identity."""
        bad = []
        for i, template in enumerate(kp.templates):
            for nu in range(self.r):
                if not self.evaluate(template.shift(nu)).is_Identity:
                    bad.append((i, nu))
        return bad

    def verify(self, kp: KernelPresentation, allow_reducible: bool = True) -> None:
        if set(self.table) != set(kp.generators):
            raise RepresentationError(
                f"representation covers {sorted(self.table)}, presentation has {sorted(kp.generators)}"
            )
        bad = self.failures(kp)
        if bad:
            i, nu = bad[0]
            raise RepresentationError(
                f"relator instance {kp.templates[i].shift(nu)} is not sent to the identity"
            )
        if not allow_reducible and not self.is_transitive():
            raise RepresentationError(
                f"representation is not transitive (orbits {self.orbits()}); pass allow_reducible to accept it"
            )

    # serialization

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "r": self.r,
            "table": {g: [to_cycles(p) for p in row] for g, row in self.table.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PeriodicRep":
        try:
            n, r = int(data["N"]), int(data["r"])
            table = {
                g: tuple(from_cycles(cycles, n) for cycles in row)
                for g, row in data["table"].items()
            }
        except (KeyError, TypeError) as exc:
            raise RepresentationError(f"malformed representation data: {exc}") from None
        return cls(n, r, table)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def trivial_rep(kp: KernelPresentation, N: int = 1, r: int = 1) -> PeriodicRep:
    return PeriodicRep(N, r, {g: (identity(N),) * r for g in kp.generators})


def load_rep(path) -> PeriodicRep:
    with open(path, encoding="utf-8") as fh:
        return PeriodicRep.from_json(json.load(fh))


def orbit_decomposition(rep: PeriodicRep) -> list[list[int]]:
    return rep.orbits()
