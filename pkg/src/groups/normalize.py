import logging
from dataclasses import dataclass, replace

from ..words import FreeWord, KernelWord, fox_derivative, schreier_rewrite
from .presentation import AugmentedGroupSystem, HNNData, Presentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelPresentation:
    """Kernel generators ``a_nu`` and the ``nu = 0`` relator templates."""

    generators: tuple[str, ...]
    templates: tuple[KernelWord, ...]
    distinguished: str = "x"

    def instances(self, nu: int) -> list[KernelWord]:
        return [t.shift(nu) for t in self.templates]


def is_normalized(system: AugmentedGroupSystem) -> bool:
    return all(system.epsilon[g] == 0 for g in system.base_generators)


def _fresh_name(name: str, taken: set[str]) -> str:
    candidate = name + "'"
    while candidate in taken:
        candidate += "'"
    return candidate


def normalize(system: AugmentedGroupSystem) -> AugmentedGroupSystem:
    """Substitute ``y = y' x^d`` for every non-distinguished ``y`` of degree ``d != 0``.

    A Tietze move per generator, so the group and the augmentation are unchanged;
    normalized systems come back as they are.
    """
    if is_normalized(system):
        return system
    x = system.distinguished
    taken = set(system.generators)
    rename: dict[str, str] = {}
    substitution: dict[str, FreeWord] = {}
    for g in system.base_generators:
        d = system.epsilon[g]
        if d == 0:
            continue
        new = _fresh_name(g, taken)
        taken.add(new)
        rename[g] = new
        substitution[g] = FreeWord.generator(new) * FreeWord.generator(x, d)
        logger.debug("normalize: %s = %s", g, substitution[g])

    def substitute(word: FreeWord) -> FreeWord:
        out = FreeWord.identity()
        for gen, exp in word:
            piece = substitution.get(gen, FreeWord.generator(gen))
            out = out * (piece if exp == 1 else ~piece)
        return out

    generators = tuple(rename.get(g, g) for g in system.generators)
    epsilon = {rename.get(g, g): (0 if g in rename else system.epsilon[g]) for g in system.generators}
    relators = tuple(substitute(r) for r in system.relators)
    longitude = substitute(system.longitude) if system.longitude is not None else None
    hnn = system.hnn
    if hnn is not None:
        hnn = HNNData(tuple(rename.get(g, g) for g in hnn.base), hnn.amalgamated)
    return replace(
        system,
        presentation=Presentation(generators, relators),
        epsilon=epsilon,
        longitude=longitude,
        hnn=hnn,
    )


def kernel_presentation(system: AugmentedGroupSystem) -> KernelPresentation:
    """Rewrite each relator of the normalized system into kernel symbols."""
    system = normalize(system)
    templates = tuple(
        schreier_rewrite(r, system.epsilon, system.distinguished) for r in system.relators
    )
    return KernelPresentation(system.base_generators, templates, system.distinguished)


def alexander_matrix(system: AugmentedGroupSystem):
    """Classical Alexander matrix in ``t``, distinguished column removed."""
    from ..laurent import LaurentPoly

    def abelianize(element) -> LaurentPoly:
        terms: dict[int, int] = {}
        for word, c in element:
            d = word.degree(system.epsilon)
            terms[d] = terms.get(d, 0) + c
        return LaurentPoly.from_terms(terms, var="t")

    return [
        [abelianize(fox_derivative(r, g)) for g in system.base_generators]
        for r in system.relators
    ]


def untwisted_alexander(system: AugmentedGroupSystem):
    """The classical Alexander polynomial in ``t``, canonical form."""
    from ..alexmod.matrix import PolyMatrix
    from ..alexmod.order import order_delta0

    system = normalize(system)
    rows = alexander_matrix(system)
    matrix = PolyMatrix(rows, var="t")
    return order_delta0(matrix)
