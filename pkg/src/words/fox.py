from typing import Iterable

from ..errors import UnknownGeneratorError
from .free import FreeWord
from .ring import GroupRingElement


def fox_derivative(
    word: FreeWord, generator: str, generators: Iterable[str] | None = None
) -> GroupRingElement:
    """Fox free derivative of ``word`` with respect to ``generator``.

    Unrolling the product rule over the letters gives one term per occurrence:
    ``+prefix`` for ``g`` and ``-prefix*g^-1`` for ``g^-1``. Since ``word`` is
    reduced both are slices of it, so nothing needs re-reducing.
    """
    if generators is not None and generator not in set(generators):
        raise UnknownGeneratorError(f"unknown generator {generator!r}")
    letters = word.letters
    terms: dict[FreeWord, int] = {}
    for i, (gen, exp) in enumerate(letters):
        if gen != generator:
            continue
        if exp == 1:
            prefix = FreeWord._trusted(letters[:i])
        else:
            prefix = FreeWord._trusted(letters[: i + 1])
        terms[prefix] = terms.get(prefix, 0) + exp
    return GroupRingElement(terms)


def fox_gradient(word: FreeWord, generators: Iterable[str]) -> dict[str, GroupRingElement]:
    return {g: fox_derivative(word, g) for g in generators}
