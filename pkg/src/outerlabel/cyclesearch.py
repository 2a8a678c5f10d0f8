"""Certified bounded search for labels around one face cycle.

Positions ``0..l-1`` follow the cycle.  The search assigns positions in
cyclic order from ``start`` and returns the lexicographically smallest
assignment (in that order) such that adjacent positions differ by at least
2, positions two apart differ, every label lies in its allowed set, and
every extra constraint holds.

Extra constraints must only touch positions inside some run of four
cyclically consecutive positions.  A partial assignment's future then
depends on its first three and last three labels alone, so dead states are
memoised and the search stays linear in ``l``.
"""

from __future__ import annotations

import sys
from collections.abc import Callable, Iterable, Sequence

from .extendability import LABELS

Check = Callable[[tuple[int, ...]], bool]
Constraint = tuple[tuple[int, ...], Check]


def solve_cycle(
    l: int,
    allowed: Sequence[Iterable[int]],
    constraints: Iterable[Constraint] = (),
    start: int = 0,
) -> list[int] | None:
    if l < 3:
        raise ValueError("cycle length must be at least 3")
    allow = [sorted(set(a)) for a in allowed]
    if len(allow) != l:
        raise ValueError("one allowed set per position")
    order = [(start + j) % l for j in range(l)]
    rank = {p: j for j, p in enumerate(order)}
    # each constraint is checked once, when its last position is assigned
    due: list[list[Constraint]] = [[] for _ in range(l)]
    for pos, test in constraints:
        pos = tuple(p % l for p in pos)
        due[max(rank[p] for p in pos)].append((pos, test))
    lab: list[int] = [-1] * l

    def ok(j: int) -> bool:
        p = order[j]
        x = lab[p]
        for d in (1, 2):
            for q in ((p - d) % l, (p + d) % l):
                if q == p or rank[q] > j:
                    continue
                y = lab[q]
                if d == 1 or l == 3:
                    if abs(x - y) < 2:
                        return False
                elif x == y:
                    return False
        return all(test(tuple(lab[q] for q in pos)) for pos, test in due[j])

    dead: set[tuple] = set()

    def key(j: int) -> tuple:
        head = tuple(lab[order[i]] for i in range(min(j, 3)))
        tail = tuple(lab[order[i]] for i in range(max(0, j - 3), j))
        return (j, head, tail)

    def rec(j: int) -> bool:
        if j == l:
            return True
        k = key(j)
        if k in dead:
            return False
        p = order[j]
        for x in allow[p]:
            lab[p] = x
            if ok(j) and rec(j + 1):
                return True
        lab[p] = -1
        dead.add(k)
        return False

    limit = sys.getrecursionlimit()
    if l + 100 > limit:
        sys.setrecursionlimit(l + 200)
    try:
        found = rec(0)
    finally:
        sys.setrecursionlimit(limit)
    return list(lab) if found else None


def full_allowed(l: int) -> list[list[int]]:
    return [list(LABELS) for _ in range(l)]
