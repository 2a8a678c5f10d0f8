"""Block / branch decomposition.

A *block* here is a maximal 2-connected subgraph with at least three
vertices.  Everything else (the bridges) is covered by *branches*: maximal
paths whose interior vertices have degree 2 in the graph and lie in no
block.  Branch ends are "terminals": block vertices or vertices of degree
other than 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph

Node = tuple[str, int]  # ("block", i) | ("branch", j) | ("vertex", v)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]
    branches: tuple[tuple[int, ...], ...]
    tree_nodes: tuple[Node, ...]
    tree_edges: tuple[tuple[Node, Node], ...]

    def block_of(self) -> dict[int, int]:
        """Map each block vertex to its block index."""
        out: dict[int, int] = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out


def biconnected_edge_components(g: Graph) -> list[list[Edge]]:
    """Edge sets of the biconnected components (bridges appear as singletons).

    Iterative Hopcroft-Tarjan; components are returned in discovery order.
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    comps: list[list[Edge]] = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        estack: list[Edge] = []
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = adj[v][i]
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    estack.append((v, w))
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = []
                while True:
                    e = estack.pop()
                    comp.append(e if e[0] < e[1] else (e[1], e[0]))
                    if e == (parent, v):
                        break
                comps.append(sorted(comp))
    return comps


def block_decomposition(g: Graph) -> BlockDecomposition:
    comps = biconnected_edge_components(g)
    blocks = []
    block_edges = []
    for comp in comps:
        if len(comp) >= 3:
            verts = sorted({x for e in comp for x in e})
            blocks.append(verts)
            block_edges.append(frozenset(comp))
    order = sorted(range(len(blocks)), key=lambda i: blocks[i][0])
    blocks = [tuple(blocks[i]) for i in order]
    block_edges = [block_edges[i] for i in order]

    in_block: dict[int, int] = {}
    for i, b in enumerate(blocks):
        for v in b:
            in_block[v] = i
    covered = set().union(*block_edges) if block_edges else set()

    def terminal(v: int) -> bool:
        return v in in_block or g.degree(v) != 2

    # Walk bridge paths between terminals.
    used: set[Edge] = set()
    branches: list[tuple[int, ...]] = []
    for s in range(g.n):
        if not terminal(s):
            continue
        for w in g.adjacency[s]:
            e = (min(s, w), max(s, w))
            if e in covered or e in used:
                continue
            path = [s, w]
            used.add(e)
            while not terminal(path[-1]):
                x = path[-1]
                nxt = [y for y in g.adjacency[x] if y != path[-2]]
                y = nxt[0]
                used.add((min(x, y), max(x, y)))
                path.append(y)
            branches.append(tuple(path))
    # Bridge-only cycles cannot exist, so every bridge is now used.

    cut_vertices = frozenset(
        v for v in in_block if any(
            (min(v, w), max(v, w)) not in covered for w in g.adjacency[v]
        )
    )

    nodes: list[Node] = [("block", i) for i in range(len(blocks))]
    loose = [v for v in range(g.n) if v not in in_block and g.degree(v) != 2]
    nodes += [("vertex", v) for v in loose]
    nodes += [("branch", j) for j in range(len(branches))]
    tree_edges = []
    for j, p in enumerate(branches):
        for end in (p[0], p[-1]):
            anchor: Node = ("block", in_block[end]) if end in in_block else ("vertex", end)
            tree_edges.append((("branch", j), anchor))
    return BlockDecomposition(
        blocks=tuple(blocks),
        block_edges=tuple(block_edges),
        cut_vertices=cut_vertices,
        branches=tuple(branches),
        tree_nodes=tuple(nodes),
        tree_edges=tuple(tree_edges),
    )
