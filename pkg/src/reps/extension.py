from sympy.combinatorics import Permutation

from .periodic import PeriodicRep


def _pairs(rep: PeriodicRep) -> list[tuple[list[int], list[int]]]:
    return [
        (row[nu].array_form, row[(nu + 1) % rep.r].array_form)
        for row in rep.table.values()
        for nu in range(rep.r)
    ]


def _extend(x: dict[int, int], used: set[int], j: int, k: int, pairs) -> bool:
    """Assign ``X(j) = k`` and follow ``X(q(j)) = p(X(j))`` through every pair."""
    queue = [(j, k)]
    while queue:
        j, k = queue.pop()
        if j in x:
            if x[j] != k:
                return False
            continue
        if k in used:
            return False
        x[j] = k
        used.add(k)
        for p, q in pairs:
            queue.append((q[j], p[k]))
    return True


def extends_over_G(rep: PeriodicRep) -> Permutation | None:
    """Find ``X`` in ``S_N`` with ``sigma(rho)(u) = X rho(u) X^-1`` for all ``u``, if any.

    Such an ``X`` is the image of the distinguished generator in an extension of
    ``rho`` to the whole group. The identity is tried first at every point.
    """
    n = rep.N
    pairs = _pairs(rep)

    def solve(x: dict[int, int], used: set[int]) -> dict[int, int] | None:
        j = next((i for i in range(n) if i not in x), None)
        if j is None:
            return x
        for k in [j] + [v for v in range(n) if v != j]:
            if k in used:
                continue
            x2, used2 = dict(x), set(used)
            if _extend(x2, used2, j, k, pairs):
                found = solve(x2, used2)
                if found is not None:
                    return found
        return None

    found = solve({}, set())
    if found is None:
        return None
    witness = Permutation([found[i] for i in range(n)])
    for row in rep.table.values():
        for nu in range(rep.r):
            if witness * row[nu] * ~witness != row[(nu + 1) % rep.r]:
                return None
    return witness
