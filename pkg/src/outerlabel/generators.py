"""Graph families: the ladder-like extremal family, exhaustive polygon
dissections with Δ ≤ 3, and seeded random outerplanar graphs."""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .graph import Edge, Graph

ENUMERATION_CAP = 14


@dataclass(frozen=True)
class GlInstance:
    l: int
    graph: Graph
    names: tuple[str, ...]


def gen_gl(l: int) -> GlInstance:
    """Two rails ``x_1..x_l`` and ``y_1..y_l`` joined by rungs ``x_i y_i``,
    with end vertices ``u`` (next to ``x_1, y_1``) and ``v`` (next to
    ``x_l, y_l``).

    Vertex ids: ``u = 0``, ``x_i = i``, ``v = l + 1``, ``y_i = l + 1 + i``.
    """
    if l < 3:
        raise ValueError("G(l) needs l >= 3")
    u, v = 0, l + 1

    def x(i: int) -> int:
        return i

    def y(i: int) -> int:
        return l + 1 + i

    edges = [(u, x(1)), (u, y(1)), (v, x(l)), (v, y(l))]
    edges += [(x(i), x(i + 1)) for i in range(1, l)]
    edges += [(y(i), y(i + 1)) for i in range(1, l)]
    edges += [(x(i), y(i)) for i in range(1, l + 1)]
    names = ["u"] + [f"x{i}" for i in range(1, l + 1)] + ["v"] + [f"y{i}" for i in range(1, l + 1)]
    return GlInstance(l, Graph.from_edges(2 * l + 2, edges), tuple(names))


# ---------------------------------------------------------------------------
# dissections
# ---------------------------------------------------------------------------


def polygon_graph(n: int, chords) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + list(chords))


def chord_sets(n: int) -> list[tuple[Edge, ...]]:
    """All sets of pairwise non-crossing, vertex-disjoint chords of an
    n-gon (so every vertex keeps degree <= 3)."""

    @lru_cache(maxsize=None)
    def within(lo: int, hi: int) -> tuple[tuple[Edge, ...], ...]:
        if hi - lo < 2:
            return ((),)
        out = list(within(lo + 1, hi))
        for j in range(lo + 2, hi + 1):
            if lo == 0 and j == n - 1:
                continue  # polygon edge
            for a in within(lo + 1, j - 1):
                for b in within(j + 1, hi):
                    out.append(((lo, j),) + a + b)
        return tuple(out)

    return [tuple(sorted(s)) for s in within(0, n - 1)]


def dihedral_canonical(n: int, chords) -> tuple[Edge, ...]:
    best = None
    for r in range(n):
        for flip in (False, True):
            img = []
            for a, b in chords:
                if flip:
                    a, b = (r - a) % n, (r - b) % n
                else:
                    a, b = (a + r) % n, (b + r) % n
                img.append((min(a, b), max(a, b)))
            key = tuple(sorted(img))
            if best is None or key < best:
                best = key
    return best  # type: ignore[return-value]


def enumerate_2conn_outerplanar(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """Every n-gon plus non-crossing chords with Δ ≤ 3, once per dihedral
    class, in increasing order of the canonical chord tuple."""
    if not 3 <= n <= cap:
        raise ValueError(f"n must lie in [3, {cap}]")
    classes = sorted({dihedral_canonical(n, s) for s in chord_sets(n)})
    for chords in classes:
        yield polygon_graph(n, chords)


# ---------------------------------------------------------------------------
# random composition
# ---------------------------------------------------------------------------

BLOCK_SIZES = (3, 10)
BRANCH_LENGTHS = (1, 3)


def _random_dissection(rng: random.Random, s: int, keep_free: int) -> list[Edge]:
    cands = [
        (a, b)
        for a in range(s)
        for b in range(a + 2, s)
        if not (a == 0 and b == s - 1) and keep_free not in (a, b)
    ]
    rng.shuffle(cands)
    used: set[int] = set()
    chords: list[Edge] = []
    for a, b in cands:
        if a in used or b in used or rng.random() < 0.3:
            continue
        if any((a < c < b) != (a < d < b) for c, d in chords if len({a, b, c, d}) == 4):
            continue
        chords.append((a, b))
        used |= {a, b}
    return chords


def random_outerplanar(n: int, seed: int) -> Graph:
    """Seeded composition of random dissection blocks and short branches.

    New pieces hang off vertices of degree at most 2 only, so Δ ≤ 3 holds
    and the block tree stays a tree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges: list[Edge] = []
    deg = [0] * n
    count = 0

    def add_edge(a: int, b: int) -> None:
        edges.append((min(a, b), max(a, b)))
        deg[a] += 1
        deg[b] += 1

    def add_block(size: int, anchor: int | None) -> None:
        nonlocal count
        base = count
        count += size
        for i in range(size):
            add_edge(base + i, base + (i + 1) % size)
        for a, b in _random_dissection(rng, size, 0):
            add_edge(base + a, base + b)
        if anchor is not None:
            add_edge(anchor, base)

    lo, hi = BLOCK_SIZES
    if n >= 3 and rng.random() < 0.8:
        add_block(min(rng.randint(lo, hi), n), None)
    else:
        count = 1
    while count < n:
        open_ = [v for v in range(count) if deg[v] <= 2]
        a = rng.choice(open_)
        length = rng.randint(*BRANCH_LENGTHS)
        remaining = n - count
        prev = a
        for _ in range(min(length - 1, remaining)):
            add_edge(prev, count)
            prev = count
            count += 1
        remaining = n - count
        if remaining == 0:
            break
        if remaining >= 3 and rng.random() < 0.6:
            add_block(min(rng.randint(lo, hi), remaining), prev)
        else:
            add_edge(prev, count)
            count += 1
    return Graph.from_edges(n, edges)
