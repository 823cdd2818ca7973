import re
from typing import Iterable, Iterator, Mapping

from ..errors import NotInKernelError, NotNormalizedError, UnknownGeneratorError
from .free import GENERATOR_PATTERN, FreeWord, format_syllables

Symbol = tuple[str, int]
KernelLetter = tuple[Symbol, int]

KERNEL_SYLLABLE = re.compile(rf"\s*({GENERATOR_PATTERN})_(-?\d+)(?:\^([+-]?\d+))?")


class KernelWord:
    """A reduced word in the symbols ``a_nu = x^nu a x^-nu`` of the kernel."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[KernelLetter] = ()):
        stack: list[KernelLetter] = []
        for symbol, exp in letters:
            if exp not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
            if stack and stack[-1] == (symbol, -exp):
                stack.pop()
            else:
                stack.append((symbol, exp))
        self.letters: tuple[KernelLetter, ...] = tuple(stack)

    def __mul__(self, other: "KernelWord") -> "KernelWord":
        return KernelWord(self.letters + other.letters)

    def __invert__(self) -> "KernelWord":
        return KernelWord(((s, -e) for s, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[KernelLetter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, KernelWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"KernelWord({str(self)!r})"

    def __str__(self) -> str:
        return format_syllables(self.letters, lambda s: f"{s[0]}_{s[1]}") or "1"

    def shift(self, k: int) -> "KernelWord":
        return shift_kernel_word(self, k)

    def generators(self) -> set[str]:
        return {g for (g, _), _ in self.letters}

    def indices(self) -> list[int]:
        return [nu for (_, nu), _ in self.letters]


def shift_kernel_word(word: KernelWord, k: int) -> KernelWord:
    """Conjugate by ``x^k``: every shift index moves by ``k``."""
    shifted = KernelWord.__new__(KernelWord)
    shifted.letters = tuple(((g, nu + k), e) for (g, nu), e in word.letters)
    return shifted


def _distinguished(degrees: Mapping[str, int]) -> str:
    moving = [g for g, d in degrees.items() if d != 0]
    if len(moving) != 1 or degrees[moving[0]] != 1:
        raise NotNormalizedError(
            "presentation is not normalized: expected exactly one generator of degree 1, "
            f"found degrees {dict(degrees)}"
        )
    return moving[0]


def schreier_letters(
    word: FreeWord, degrees: Mapping[str, int], distinguished: str | None = None, start: int = 0
) -> KernelWord:
    """Rewrite ``word`` with the transversal ``{x^n}`` starting at coset ``x^start``.

    No kernel check: the result represents ``x^start * word * x^-(start + deg word)``.
    """
    x = distinguished or _distinguished(degrees)
    level = start
    out: list[KernelLetter] = []
    for gen, exp in word.letters:
        if gen not in degrees:
            raise UnknownGeneratorError(f"generator {gen!r} has no degree")
        if gen == x:
            level += exp
        elif degrees[gen] == 0:
            out.append(((gen, level), exp))
        else:
            raise NotNormalizedError(
                f"generator {gen!r} has degree {degrees[gen]}; normalize the presentation first"
            )
    return KernelWord(out)


def schreier_rewrite(
    word: FreeWord, degrees: Mapping[str, int], distinguished: str | None = None
) -> KernelWord:
    """Reidemeister-Schreier rewrite of a degree-zero word into kernel symbols."""
    total = word.degree(degrees)
    if total != 0:
        raise NotInKernelError(f"word {word} has degree {total}, not 0")
    return schreier_letters(word, degrees, distinguished)


def parse_kernel_word(text: str, generators: Iterable[str] | None = None) -> KernelWord:
    """Parse ``a_1 a_0^-2`` style text."""
    known = set(generators) if generators is not None else None
    if text.strip() in ("", "1"):
        return KernelWord()
    letters: list[KernelLetter] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = KERNEL_SYLLABLE.match(text, pos)
        if not match:
            raise ValueError(f"expected a kernel symbol like a_0 at offset {pos}")
        name, nu, power = match.group(1), int(match.group(2)), int(match.group(3) or 1)
        if known is not None and name not in known:
            raise UnknownGeneratorError(f"unknown generator {name!r}")
        sign = 1 if power > 0 else -1
        letters.extend([((name, nu), sign)] * abs(power))
        pos = match.end()
    return KernelWord(letters)
