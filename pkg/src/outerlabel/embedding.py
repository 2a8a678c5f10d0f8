"""Outerplanar embedding of 2-connected blocks, inner faces and the weak dual."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotOuterplanar
from .graph import Edge, Graph


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]
    shared_edges: dict[Edge, int]

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class OuterEmbedding:
    outer_cycle: tuple[int, ...]
    chords: frozenset[Edge]
    faces: tuple[Face, ...]
    weak_dual: tuple[tuple[int, int], ...]

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer_cycle)}

    def dual_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.faces]
        for a, b in self.weak_dual:
            adj[a].append(b)
            adj[b].append(a)
        for row in adj:
            row.sort()
        return adj


# ---------------------------------------------------------------------------
# Hamiltonian outer cycle
# ---------------------------------------------------------------------------


def _hamiltonian_cycle(g: Graph) -> list[int] | None:
    """Backtracking search for a Hamiltonian cycle through vertex 0.

    Prunes when the unvisited vertices plus the two path ends stop being
    connected, or when some unvisited vertex has fewer than two usable
    neighbours.
    """
    n = g.n
    adj = g.adjacency
    start = min(range(n), key=lambda v: (g.degree(v), v))
    on_path = [False] * n
    path = [start]
    on_path[start] = True

    def viable() -> bool:
        end = path[-1]
        free = [v for v in range(n) if not on_path[v]]
        if not free:
            return True
        for v in free:
            usable = sum(1 for w in adj[v] if not on_path[w] or w == end or w == start)
            if usable < 2:
                return False
        # connectivity of free vertices together with end and start
        allowed = set(free)
        allowed.add(end)
        allowed.add(start)
        seen = {end}
        queue = deque([end])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in allowed and y not in seen:
                    if x == end and y == start and len(path) > 1:
                        continue
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(allowed)

    # iterative DFS over choice indices
    choices = [0]
    while choices:
        end = path[-1]
        if len(path) == n:
            if start in adj[end] and n >= 3:
                return list(path)
            choices.pop()
            on_path[path.pop()] = False
            continue
        i = choices[-1]
        nbrs = adj[end]
        advanced = False
        while i < len(nbrs):
            w = nbrs[i]
            i += 1
            if on_path[w]:
                continue
            choices[-1] = i
            path.append(w)
            on_path[w] = True
            if viable():
                choices.append(0)
                advanced = True
                break
            on_path[path.pop()] = False
        if advanced:
            continue
        choices.pop()
        if len(path) > 1:
            on_path[path.pop()] = False
        else:
            break
    return None


def chords_cross(a: int, b: int, c: int, d: int, pos: dict[int, int]) -> bool:
    """Chords {a,b} and {c,d} cross iff exactly one of c, d lies strictly
    inside the arc a -> b and they share no endpoint."""
    if len({a, b, c, d}) < 4:
        return False
    lo, hi = sorted((pos[a], pos[b]))
    inside_c = lo < pos[c] < hi
    inside_d = lo < pos[d] < hi
    return inside_c != inside_d


def outer_embedding(block: Graph) -> OuterEmbedding:
    """Outer cycle, chords, faces and weak dual of a 2-connected block.

    Raises NotOuterplanar when no Hamiltonian cycle with pairwise
    non-crossing chords exists.
    """
    n = block.n
    if n < 3:
        raise ValueError("a block needs at least three vertices")
    if block.m > 2 * n - 3:
        raise NotOuterplanar(f"too many edges for an outerplanar graph ({block.m} > {2 * n - 3})")
    if sum(1 for v in range(n) if block.degree(v) == 2) < 2:
        raise NotOuterplanar("a 2-connected outerplanar graph has two vertices of degree 2")
    cycle = _hamiltonian_cycle(block)
    if cycle is None:
        raise NotOuterplanar("no Hamiltonian cycle")
    # canonical orientation: start at vertex 0 towards its smaller cycle neighbour
    i0 = cycle.index(0)
    cycle = cycle[i0:] + cycle[:i0]
    if n > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    cyc_edges = {
        (min(cycle[i], cycle[(i + 1) % n]), max(cycle[i], cycle[(i + 1) % n])) for i in range(n)
    }
    chords = frozenset(block.edges - cyc_edges)
    pos = {v: i for i, v in enumerate(cycle)}
    # A 2-connected outerplanar graph has a unique Hamiltonian cycle, so a
    # crossing here is conclusive.
    _check_non_crossing(chords, pos)
    faces, dual = faces_and_weak_dual(tuple(cycle), chords)
    return OuterEmbedding(tuple(cycle), chords, faces, dual)


def _check_non_crossing(chords: frozenset[Edge], pos: dict[int, int]) -> None:
    spans = sorted(
        ((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in chords),
        key=lambda s: (s[0], -s[1]),
    )
    # properly nested intervals <=> no crossing; sweep with a stack of right ends
    stack: list[int] = []
    for lo, hi in spans:
        while stack and stack[-1] <= lo:
            stack.pop()
        if stack and hi > stack[-1]:
            raise NotOuterplanar("chords cross for the unique Hamiltonian cycle")
        stack.append(hi)


# ---------------------------------------------------------------------------
# Faces and weak dual
# ---------------------------------------------------------------------------


def faces_and_weak_dual(
    outer_cycle: tuple[int, ...], chords: frozenset[Edge]
) -> tuple[tuple[Face, ...], tuple[tuple[int, int], ...]]:
    """Inner faces by a stack scan of the outer cycle, and the weak dual tree."""
    n = len(outer_cycle)
    pos = {v: i for i, v in enumerate(outer_cycle)}
    closing: list[list[int]] = [[] for _ in range(n)]
    for a, b in chords:
        lo, hi = sorted((pos[a], pos[b]))
        closing[hi].append(lo)
    boundaries: list[list[int]] = []
    stack: list[int] = []
    for p in range(n):
        for q in sorted(closing[p], reverse=True):
            inner = []
            while stack[-1] != q:
                inner.append(stack.pop())
            boundaries.append([q] + inner[::-1] + [p])
        stack.append(p)
    boundaries.append(stack)

    owner: dict[Edge, list[int]] = {}
    for fid, b in enumerate(boundaries):
        k = len(b)
        for i in range(k):
            x, y = outer_cycle[b[i]], outer_cycle[b[(i + 1) % k]]
            e = (min(x, y), max(x, y))
            if e in chords:
                owner.setdefault(e, []).append(fid)
    shared: list[dict[Edge, int]] = [{} for _ in boundaries]
    dual = []
    for e in sorted(owner):
        f1, f2 = owner[e]
        shared[f1][e] = f2
        shared[f2][e] = f1
        dual.append((min(f1, f2), max(f1, f2)))
    faces = tuple(
        Face(tuple(outer_cycle[i] for i in b), shared[fid]) for fid, b in enumerate(boundaries)
    )
    for f in faces:
        assert len(f.boundary) >= 3
        nbrs = list(f.shared_edges.values())
        assert len(nbrs) == len(set(nbrs)), "adjacent faces share more than one edge"
    return faces, tuple(sorted(dual))


def check_embedding(block: Graph, emb: OuterEmbedding) -> None:
    """Assert the structural invariants of an accepted embedding."""
    n = len(emb.outer_cycle)
    assert sorted(emb.outer_cycle) == list(range(block.n))
    for i in range(n):
        assert block.has_edge(emb.outer_cycle[i], emb.outer_cycle[(i + 1) % n])
    assert len(emb.faces) == len(emb.chords) + 1
    assert sum(len(f) for f in emb.faces) == n + 2 * len(emb.chords)
    pos = emb.position()
    cl = sorted(emb.chords)
    for i, (a, b) in enumerate(cl):
        for c, d in cl[i + 1 :]:
            assert not chords_cross(a, b, c, d, pos)
    assert len(emb.weak_dual) == len(emb.faces) - 1


def intersecting_triangles_ok(block: Graph, emb: OuterEmbedding) -> bool:
    """Two inner 3-faces sharing a vertex force a 4-vertex block when Δ = 3."""
    if block.max_degree() != 3:
        return True
    tri = [set(f.boundary) for f in emb.faces if len(f) == 3]
    for i in range(len(tri)):
        for j in range(i + 1, len(tri)):
            if tri[i] & tri[j] and block.n != 4:
                return False
    return True
