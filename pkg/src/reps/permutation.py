"""Helpers around ``sympy.combinatorics.Permutation``.

Points are ``0..N-1`` internally and ``1..N`` in cycle notation. Products
follow sympy: ``p*q`` applies ``p`` first, so words act on the right.
"""

from itertools import permutations
from typing import Iterable, Iterator

from sympy.combinatorics import Permutation

from ..errors import RepresentationError


def identity(n: int) -> Permutation:
    return Permutation(list(range(n)))


def full_cycle(n: int) -> Permutation:
    """The cycle ``(1 2 ... n)``."""
    return Permutation(list(range(1, n)) + [0])


def from_cycles(cycles: Iterable[Iterable[int]], n: int) -> Permutation:
    """Build a degree-``n`` permutation from 1-based cycles."""
    zero_based = []
    seen: set[int] = set()
    for cyc in cycles:
        points = [int(i) - 1 for i in cyc]
        if any(p < 0 or p >= n for p in points):
            raise RepresentationError(f"cycle {list(cyc)} leaves [1, {n}]")
        if seen.intersection(points) or len(set(points)) != len(points):
            raise RepresentationError(f"cycles {list(cycles)} are not disjoint")
        seen.update(points)
        if len(points) > 1:
            zero_based.append(points)
    if not zero_based:
        return identity(n)
    return Permutation(zero_based, size=n)


def to_cycles(p: Permutation) -> list[list[int]]:
    """1-based cycles without fixed points; ``[]`` for the identity."""
    return [[i + 1 for i in cyc] for cyc in p.cyclic_form]


def all_permutations(n: int) -> Iterator[Permutation]:
    """``S_n`` in lexicographic order of image arrays, identity first."""
    for images in permutations(range(n)):
        yield Permutation(list(images))

