"""Slow reference implementations used to cross-check the fast code.

Nothing here imports the predicates it checks.  Extendability is decided
straight from the attachment families: build every graph of the family and
search for labels of the new vertices.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations, product

from .graph import Graph


def _valid_extension(n_fixed: int, labels: list[int], edges: list[tuple[int, int]], n: int) -> bool:
    """Can vertices ``n_fixed..n-1`` be labelled in [0, 6] so the whole
    graph is an L(2,1)-labeling?  Fixed labels are assumed valid."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    d2 = [{z for y in adj[x] for z in adj[y]} - adj[x] - {x} for x in range(n)]
    lab = labels + [-1] * (n - n_fixed)

    def ok(v: int, x: int) -> bool:
        for w in adj[v]:
            if lab[w] >= 0 and abs(lab[w] - x) < 2:
                return False
        return all(lab[w] != x for w in d2[v] if lab[w] >= 0)

    def rec(v: int) -> bool:
        if v == n:
            return True
        for x in range(7):
            if ok(v, x):
                lab[v] = x
                if rec(v + 1):
                    return True
        lab[v] = -1
        return False

    return rec(n_fixed)


def _base_valid(labels: Sequence[int], edges) -> bool:
    n = len(labels)
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for a, b in edges:
        if abs(labels[a] - labels[b]) < 2:
            return False
    for x in range(n):
        for y in adj[x]:
            for z in adj[y]:
                if z != x and z not in adj[x] and labels[z] == labels[x]:
                    return False
    return True


def _maximal_site_sets(sites: list[int], clash) -> list[tuple[int, ...]]:
    """Inclusion-maximal subsets of ``sites`` with no clashing pair."""
    out = []
    for r in range(len(sites), -1, -1):
        for s in combinations(sites, r):
            if any(clash(a, b) for a, b in combinations(s, 2)):
                continue
            if any(set(s) < set(t) for t in out):
                continue
            out.append(s)
    return out


def _extends_all(labels: list[int], base_edges, site_pairs: dict[int, tuple[int, int]], sets) -> bool:
    # a labeling of a graph restricts to one of every subgraph on the same
    # fixed vertices, so maximal site sets suffice
    n0 = len(labels)
    for s in sets:
        for kinds in product((2, 3), repeat=len(s)):
            edges = list(base_edges)
            n = n0
            for site, k in zip(s, kinds):
                a, b = site_pairs[site]
                if k == 2:
                    edges += [(a, n), (n, b)]
                    n += 1
                else:
                    edges += [(a, n), (n, n + 1), (n + 1, b)]
                    n += 2
            if not _valid_extension(n0, labels, edges, n):
                return False
    return True


def brute_path_extendable(seq: Sequence[int]) -> bool:
    """``seq`` labels ``u, u_1, ..., u_l, v``; sites are the edges
    ``u_i u_{i+1}``, ``1 <= i < l``, pairwise at least two apart."""
    labels = list(seq)
    m = len(labels)
    if any(not 0 <= x <= 6 for x in labels):
        return False
    base = [(i, i + 1) for i in range(m - 1)]
    if not _base_valid(labels, base):
        return False
    l = m - 2
    pairs = {i: (i, i + 1) for i in range(1, l)}
    sets = _maximal_site_sets(list(pairs), lambda a, b: abs(a - b) < 2)
    return _extends_all(labels, base, pairs, sets)


def brute_cycle_extendable(seq: Sequence[int], kind: int = 1, cyclic_gap: bool = True) -> bool:
    """``seq`` labels ``u_1, ..., u_l`` around a cycle.

    Kind 1 allows sites ``1..l`` (site ``i`` is the edge ``u_i u_{i+1}``,
    indices mod l); kind 2 allows ``2..l-1``.  With ``cyclic_gap`` the
    sites ``1`` and ``l`` also clash, as they share ``u_1``.
    """
    labels = list(seq)
    l = len(labels)
    if any(not 0 <= x <= 6 for x in labels):
        return False
    base = [(i, (i + 1) % l) for i in range(l)]
    if not _base_valid(labels, base):
        return False
    allowed = range(1, l + 1) if kind == 1 else range(2, l)
    pairs = {i: (i - 1, i % l) for i in allowed}

    def clash(a: int, b: int) -> bool:
        if abs(a - b) < 2:
            return True
        return cyclic_gap and {a, b} == {1, l}

    sets = _maximal_site_sets(list(pairs), clash)
    return _extends_all(labels, base, pairs, sets)


def brute_chord_sets(n: int) -> set[frozenset[tuple[int, int]]]:
    """All chord sets of an n-gon with Δ ≤ 3 and no crossings, by testing
    every subset of at most n // 2 chords."""
    chords = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]

    def cross(c: tuple[int, int], d: tuple[int, int]) -> bool:
        (a, b), (x, y) = c, d
        if len({a, b, x, y}) < 4:
            return False
        return (a < x < b) != (a < y < b)

    out = set()
    for r in range(n // 2 + 1):
        for s in combinations(chords, r):
            ends = [v for c in s for v in c]
            if len(ends) != len(set(ends)):
                continue
            if any(cross(c, d) for c, d in combinations(s, 2)):
                continue
            out.add(frozenset(s))
    return out


def naive_k_labelable(g: Graph, k: int) -> bool:
    """Plain product enumeration over ``[0, k]^n``; tiny graphs only."""
    pairs1 = list(g.edges)
    pairs2 = [(u, w) for u in range(g.n) for w in g.second_neighbors(u) if u < w]
    for f in product(range(k + 1), repeat=g.n):
        if all(abs(f[a] - f[b]) >= 2 for a, b in pairs1) and all(f[a] != f[b] for a, b in pairs2):
            return True
    return False
