import logging
from dataclasses import dataclass, field

from sympy.combinatorics import Permutation

from ..groups import KernelPresentation
from ..workers import DEFAULT_THREADS, gather_map
from .permutation import all_permutations, identity
from .periodic import PeriodicRep

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 200_000

Var = tuple[str, int]
Instance = list[tuple[Var, int]]


@dataclass
class EnumerationResult:
    reps: list[PeriodicRep]
    complete: bool
    explored: int
    notes: list[str] = field(default_factory=list)


@dataclass
class _Branch:
    state: dict[Var, Permutation]
    budget: int
    found: list[dict[Var, Permutation]] = field(default_factory=list)
    explored: int = 0
    complete: bool = True


def _instances(kp: KernelPresentation, r: int) -> list[Instance]:
    out = []
    for template in kp.templates:
        for nu in range(r):
            out.append([((g, mu % r), e) for (g, mu), e in template.shift(nu)])
    return out


def _product(letters: Instance, state: dict[Var, Permutation], n: int) -> Permutation:
    result = identity(n)
    for var, e in letters:
        p = state[var]
        result = result * (p if e == 1 else ~p)
    return result


def _propagate(state: dict[Var, Permutation], instances: list[Instance], n: int) -> bool:
    """Check complete instances and solve instances with one unknown used once.

    Mutates ``state``; returns False on a contradiction.
    """
    changed = True
    while changed:
        changed = False
        for letters in instances:
            unknown = {v for v, _ in letters if v not in state}
            if not unknown:
                if not _product(letters, state, n).is_Identity:
                    return False
                continue
            if len(unknown) != 1:
                continue
            (var,) = unknown
            positions = [i for i, (v, _) in enumerate(letters) if v == var]
            if len(positions) != 1:
                continue
            i = positions[0]
            left = _product(letters[:i], state, n)
            right = _product(letters[i + 1:], state, n)
            # left * v^e * right = 1
            value = ~left * ~right
            state[var] = value if letters[i][1] == 1 else ~value
            changed = True
    return True


def _search(branch: _Branch, order: list[Var], instances: list[Instance], n: int) -> None:
    stack = [branch.state]
    while stack:
        state = stack.pop()
        if branch.explored >= branch.budget:
            branch.complete = False
            return
        branch.explored += 1
        if not _propagate(state, instances, n):
            continue
        free = next((v for v in order if v not in state), None)
        if free is None:
            branch.found.append(state)
            continue
        children = []
        for p in all_permutations(n):
            child = dict(state)
            child[free] = p
            children.append(child)
        stack.extend(reversed(children))


def _canonical(rep: PeriodicRep, conjugators: list[Permutation]) -> PeriodicRep:
    best = rep
    for k in range(rep.r):
        shifted = rep.sigma(k)
        for s in conjugators:
            candidate = shifted.conjugate(s)
            if candidate.key() < best.key():
                best = candidate
    return best


def enumerate_periodic(
    kp: KernelPresentation,
    N: int,
    r: int,
    limit: int = DEFAULT_LIMIT,
    raw: bool = False,
    allow_reducible: bool = False,
    threads: int = DEFAULT_THREADS,
) -> EnumerationResult:
    """Period-``r`` representations of the kernel into ``S_N`` by backtracking.

    The search splits on the first free variable and gives each branch an equal
    share of ``limit``, so the output does not depend on ``threads``. Unless
    ``raw``, results are reduced to one representative per shift orbit and
    simultaneous conjugacy class.
    """
    if N < 1 or r < 1:
        raise ValueError(f"need N >= 1 and r >= 1, got N={N}, r={r}")
    order: list[Var] = [(g, nu) for nu in range(r) for g in kp.generators]
    instances = _instances(kp, r)
    notes: list[str] = []

    root: dict[Var, Permutation] = {}
    if not _propagate(root, instances, N):
        return EnumerationResult([], True, 1, ["relators are inconsistent at the root"])
    free = next((v for v in order if v not in root), None)
    if free is None:
        seeds = [root]
    else:
        seeds = []
        for p in all_permutations(N):
            child = dict(root)
            child[free] = p
            seeds.append(child)
    share = max(limit // len(seeds), 1)
    branches = [_Branch(seed, share) for seed in seeds]
    logger.info("enumerating N=%d r=%d over %d branches, %d nodes each", N, r, len(branches), share)

    def run(branch: _Branch) -> _Branch:
        _search(branch, order, instances, N)
        return branch

    branches = gather_map(run, branches, threads)
    explored = sum(b.explored for b in branches)
    complete = all(b.complete for b in branches)
    if not complete:
        notes.append(f"search budget of {limit} nodes exhausted; the list may be partial")

    reps = []
    for b in branches:
        for state in b.found:
            table = {g: tuple(state[(g, nu)] for nu in range(r)) for g in kp.generators}
            reps.append(PeriodicRep(N, r, table))
    if not allow_reducible:
        total = len(reps)
        reps = [rep for rep in reps if rep.is_transitive()]
        if total != len(reps):
            notes.append(f"dropped {total - len(reps)} non-transitive representations")
    if not raw:
        conjugators = list(all_permutations(N))
        unique = {}
        for rep in reps:
            canon = _canonical(rep, conjugators)
            unique.setdefault(canon.key(), canon)
        reps = list(unique.values())
    reps.sort()
    logger.info("found %d representations after exploring %d nodes", len(reps), explored)
    return EnumerationResult(reps, complete, explored, notes)
