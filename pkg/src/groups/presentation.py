from dataclasses import dataclass, field
from typing import Any, Mapping

from ..errors import EpsilonError, InputError, UnknownGeneratorError
from ..words import FreeWord, KernelWord


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise InputError(f"duplicate generator in {list(self.generators)}")
        known = set(self.generators)
        for rel in self.relators:
            if rel.is_identity():
                raise InputError("relators must be nonempty reduced words")
            unknown = rel.generators() - known
            if unknown:
                raise UnknownGeneratorError(
                    f"relator {rel} uses undeclared generators {sorted(unknown)}"
                )
        if len(self.generators) <= len(self.relators):
            raise InputError(
                f"need more generators than relators, got {len(self.generators)} "
                f"generators and {len(self.relators)} relators"
            )

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)


@dataclass(frozen=True)
class HNNData:
    """Base generators ``B`` and generators of the amalgamated subgroup ``U``."""

    base: tuple[str, ...]
    amalgamated: tuple[KernelWord, ...]


@dataclass(frozen=True)
class AugmentedGroupSystem:
    presentation: Presentation
    epsilon: Mapping[str, int] = field(hash=False)
    distinguished: str
    longitude: FreeWord | None = None
    longitude_abelian_only: bool = False  # longitude word is only trusted under abelian images
    hnn: HNNData | None = None
    name: str | None = None
    knot: bool = False
    manifold: bool = False
    fibered: bool = False
    genus: int | None = None
    growth: Any = field(default=None, hash=False)  # sympy expression

    def __post_init__(self):
        gens = self.presentation.generators
        missing = [g for g in gens if g not in self.epsilon]
        if missing:
            raise EpsilonError(f"no degree given for generators {missing}")
        extra = [g for g in self.epsilon if g not in gens]
        if extra:
            raise UnknownGeneratorError(f"degree given for undeclared generators {extra}")
        if self.distinguished not in gens:
            raise UnknownGeneratorError(f"distinguished generator {self.distinguished!r} undeclared")
        if self.epsilon[self.distinguished] != 1:
            raise EpsilonError(
                f"distinguished generator {self.distinguished!r} must have degree 1, "
                f"got {self.epsilon[self.distinguished]}"
            )
        for rel in self.presentation.relators:
            degree = rel.degree(self.epsilon)
            if degree != 0:
                raise EpsilonError(
                    f"relator {rel} has degree {degree}; the augmentation must kill it",
                    relator=str(rel),
                )
        if self.longitude is not None:
            unknown = self.longitude.generators() - set(gens)
            if unknown:
                raise UnknownGeneratorError(f"longitude uses undeclared generators {sorted(unknown)}")
            if self.longitude.degree(self.epsilon) != 0:
                raise EpsilonError(f"longitude {self.longitude} does not lie in the kernel")
        elif self.longitude_abelian_only:
            raise InputError("longitude_abelian_only is set without a longitude")
        if self.hnn is not None:
            for g in self.hnn.base:
                if g not in gens or g == self.distinguished or self.epsilon[g] != 0:
                    raise InputError(f"HNN base generator {g!r} must be a declared degree-0 generator")
            for word in self.hnn.amalgamated:
                outside = word.generators() - set(self.hnn.base)
                if outside:
                    raise InputError(
                        f"amalgamated word {word} uses generators {sorted(outside)} outside the base"
                    )
        if self.genus is not None and self.genus < 0:
            raise InputError(f"genus must be nonnegative, got {self.genus}")

    @property
    def generators(self) -> tuple[str, ...]:
        return self.presentation.generators

    @property
    def relators(self) -> tuple[FreeWord, ...]:
        return self.presentation.relators

    @property
    def base_generators(self) -> tuple[str, ...]:
        return tuple(g for g in self.generators if g != self.distinguished)

    @property
    def label(self) -> str:
        return self.name or "unnamed"
