import re
from typing import Iterable, Iterator, Mapping

from ..errors import UnknownGeneratorError

Letter = tuple[str, int]

GENERATOR_PATTERN = r"[A-Za-z][A-Za-z0-9']*"
SYLLABLE = re.compile(rf"\s*({GENERATOR_PATTERN})(?:\^([+-]?\d+))?")


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
        if stack and stack[-1] == (gen, -exp):
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


class FreeWord:
    """A freely reduced word in a free group; the empty word is the identity."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: tuple[Letter, ...] = _reduce(letters)

    @classmethod
    def _trusted(cls, letters: tuple[Letter, ...]) -> "FreeWord":
        # slices of a reduced word are reduced
        word = cls.__new__(cls)
        word.letters = letters
        return word

    @classmethod
    def generator(cls, name: str, exponent: int = 1) -> "FreeWord":
        sign = 1 if exponent > 0 else -1
        return cls([(name, sign)] * abs(exponent))

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls._trusted(())

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord._trusted(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, exponent: int) -> "FreeWord":
        if exponent < 0:
            return (~self) ** (-exponent)
        return FreeWord(self.letters * exponent)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return FreeWord._trusted(self.letters[index])
        return self.letters[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __lt__(self, other: "FreeWord") -> bool:
        return (len(self), self.letters) < (len(other), other.letters)

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"

    def __str__(self) -> str:
        return format_syllables(self.letters, str) or "1"

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def degree(self, degrees: Mapping[str, int]) -> int:
        """Image under the augmentation, given generator degrees."""
        try:
            return sum(degrees[g] * e for g, e in self.letters)
        except KeyError as exc:
            raise UnknownGeneratorError(f"generator {exc.args[0]!r} has no degree") from None


def format_syllables(letters, name) -> str:
    """Group equal adjacent letters into ``g^k`` syllables."""
    parts = []
    i = 0
    while i < len(letters):
        sym, exp = letters[i]
        j = i
        while j < len(letters) and letters[j] == (sym, exp):
            j += 1
        power = (j - i) * exp
        label = name(sym)
        parts.append(label if power == 1 else f"{label}^{power}")
        i = j
    return " ".join(parts)


def parse_word(text: str, generators: Iterable[str] | None = None) -> FreeWord:
    """Parse ``x a x^-1 a^-2`` style text; ``1`` or blank is the identity."""
    known = set(generators) if generators is not None else None
    stripped = text.strip()
    if stripped in ("", "1"):
        return FreeWord.identity()
    letters: list[Letter] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = SYLLABLE.match(text, pos)
        if not match:
            raise ValueError(f"unexpected character {text[pos:].lstrip()[0]!r} at offset {pos}")
        name, power = match.group(1), int(match.group(2) or 1)
        if known is not None and name not in known:
            raise UnknownGeneratorError(f"unknown generator {name!r}")
        sign = 1 if power > 0 else -1
        letters.extend([(name, sign)] * abs(power))
        pos = match.end()
    return FreeWord(letters)
