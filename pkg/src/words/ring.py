from typing import Iterator, Mapping

from .free import FreeWord


class GroupRingElement:
    """A finite integer combination of free-group words.

    Zero coefficients are never stored, so equality is a plain dict compare.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FreeWord, int] | None = None):
        self.terms: dict[FreeWord, int] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({FreeWord.identity(): 1})

    @classmethod
    def of(cls, word: FreeWord, coefficient: int = 1) -> "GroupRingElement":
        return cls({word: coefficient})

    @staticmethod
    def _coerce(value) -> "GroupRingElement":
        if isinstance(value, GroupRingElement):
            return value
        if isinstance(value, FreeWord):
            return GroupRingElement.of(value)
        if isinstance(value, int):
            return GroupRingElement({FreeWord.identity(): value})
        raise TypeError(f"cannot use {type(value).__name__} in the group ring")

    def __add__(self, other) -> "GroupRingElement":
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElement(terms)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "GroupRingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GroupRingElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "GroupRingElement":
        other = self._coerce(other)
        terms: dict[FreeWord, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u * v
                terms[w] = terms.get(w, 0) + a * b
        return GroupRingElement(terms)

    def __rmul__(self, other) -> "GroupRingElement":
        return self._coerce(other) * self

    def __eq__(self, other) -> bool:
        try:
            return self.terms == self._coerce(other).terms
        except TypeError:
            return False

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[FreeWord, int]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"GroupRingElement({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for word, c in self:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(word) if mag == 1 else f"{mag}*{word}"
            if word.is_identity():
                body = str(mag)
            out.append(f"{sign} {body}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
