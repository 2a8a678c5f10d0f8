"""Exact k-feasibility and λ by backtracking with forward checking.

Vertices are ordered component by component, breadth-first from a vertex of
maximum degree.  Labels are tried in ascending order and each domain is an
int bitmask over ``0..k``.  In a component without fixed vertices, the
first vertex is limited to labels ``<= ceil(k/2)``.  This is sound because
``f -> k - f`` maps labelings to labelings.
"""

from __future__ import annotations

import sys
from collections import deque
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import Graph
from .labeling import Labeling, verify

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class Infeasible:
    """Proof record: no labeling in ``[0, k]`` exists."""

    k: int
    nodes: int
    reason: str = "exhaustive"

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class LambdaResult:
    lambda_: int
    witness: Labeling
    certificate: Infeasible | None


def search_order(g: Graph) -> list[list[int]]:
    """Per component, BFS from the lowest-indexed vertex of maximum degree."""
    out = []
    for comp in g.components():
        root = max(comp, key=lambda v: (g.degree(v), -v))
        seen = {root}
        order = [root]
        dq = deque([root])
        while dq:
            v = dq.popleft()
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    dq.append(w)
        out.append(order)
    return out


class _Counter:
    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget


def _solve_component(
    g: Graph,
    order: list[int],
    k: int,
    p: int,
    q: int,
    fixed: Mapping[int, int],
    first_values: list[int] | None,
    counter: _Counter,
) -> dict[int, int] | None:
    full = (1 << (k + 1)) - 1
    near = {v: g.adjacency[v] for v in order}
    far = {v: tuple(g.second_neighbors(v)) for v in order}
    # masks of labels killed by placing x next to / two away from a vertex
    adj_kill = [sum(1 << y for y in range(k + 1) if abs(x - y) < p) for x in range(k + 1)]
    d2_kill = [sum(1 << y for y in range(k + 1) if abs(x - y) < q) for x in range(k + 1)]
    dom = {v: full for v in order}
    for v, x in fixed.items():
        if v in dom:
            if not 0 <= x <= k:
                return None
            dom[v] = 1 << x
    # fixed labels outside the component cannot interact; inside, prune now
    for v, x in fixed.items():
        if v not in dom:
            continue
        for w in near[v]:
            if w != v and not (w in fixed):
                dom[w] &= ~adj_kill[x]
        for w in far[v]:
            if not (w in fixed):
                dom[w] &= ~d2_kill[x]
    for v, x in fixed.items():
        if v not in dom:
            continue
        for w in near[v]:
            if w in fixed and abs(fixed[w] - x) < p:
                return None
        for w in far[v]:
            if w in fixed and abs(fixed[w] - x) < q:
                return None
    if any(dom[v] == 0 for v in order):
        return None
    if first_values is not None:
        dom[order[0]] &= sum(1 << x for x in first_values)
    elif not any(v in fixed for v in order):
        dom[order[0]] &= (1 << ((k + 1) // 2 + 1)) - 1
    lab: dict[int, int] = {}
    n = len(order)

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        d = dom[v]
        while d:
            low = d & -d
            x = low.bit_length() - 1
            d ^= low
            counter.nodes += 1
            if counter.nodes > counter.budget:
                raise BudgetExceeded(k, counter.nodes)
            saved = []
            ok = True
            for w in near[v]:
                if w not in lab and w != v:
                    nd = dom[w] & ~adj_kill[x]
                    if nd != dom[w]:
                        saved.append((w, dom[w]))
                        dom[w] = nd
                        if nd == 0:
                            ok = False
                            break
            if ok:
                for w in far[v]:
                    if w not in lab:
                        nd = dom[w] & ~d2_kill[x]
                        if nd != dom[w]:
                            saved.append((w, dom[w]))
                            dom[w] = nd
                            if nd == 0:
                                ok = False
                                break
            if ok:
                lab[v] = x
                if rec(i + 1):
                    return True
                del lab[v]
            for w, old in reversed(saved):
                dom[w] = old
        return False

    limit = sys.getrecursionlimit()
    if n + 200 > limit:
        sys.setrecursionlimit(n + 500)
    try:
        return dict(lab) if rec(0) else None
    finally:
        sys.setrecursionlimit(limit)


def _worker(args) -> tuple[dict[int, int] | None, int]:
    g, order, k, p, q, fixed, x, budget = args
    counter = _Counter(budget)
    try:
        sol = _solve_component(g, order, k, p, q, fixed, [x], counter)
    except BudgetExceeded:
        return {"budget": 1}, counter.nodes  # type: ignore[dict-item]
    return sol, counter.nodes


def k_feasible(
    g: Graph,
    k: int,
    p: int = 2,
    q: int = 1,
    budget: int = DEFAULT_BUDGET,
    fixed: Mapping[int, int] | None = None,
    workers: int = 1,
) -> Labeling | Infeasible:
    """A labeling of ``g`` in ``[0, k]`` (first in search order), or an
    exhaustion record.  Raises BudgetExceeded once ``budget`` nodes have
    been expanded."""
    if k < 0:
        raise ValueError("k must be non-negative")
    fixed = dict(fixed or {})
    counter = _Counter(budget)
    labels: list[int | None] = [None] * g.n
    for order in search_order(g):
        if workers > 1 and not any(v in fixed for v in order) and len(order) > 1:
            sol = _parallel_component(g, order, k, p, q, fixed, counter, workers)
        else:
            sol = _solve_component(g, order, k, p, q, fixed, None, counter)
        if sol is None:
            return Infeasible(k, counter.nodes)
        for v, x in sol.items():
            labels[v] = x
    return Labeling(tuple(labels), k)


def _parallel_component(g, order, k, p, q, fixed, counter, workers):
    """Split on the first vertex's label; the smallest feasible label wins,
    which is what the sequential search would return."""
    values = list(range((k + 1) // 2 + 1))
    share = max(counter.budget - counter.nodes, 0)
    jobs = [(g, order, k, p, q, fixed, x, share) for x in values]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_worker, jobs))
    for sol, nodes in results:
        counter.nodes += nodes
    for sol, _ in results:
        if sol is not None and "budget" not in sol:
            return sol
        if sol is not None:
            raise BudgetExceeded(k, counter.nodes)
    return None


def lambda_exact(
    g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> LambdaResult:
    """Smallest k admitting an L(2,1)-labeling, searched upward from the
    degree bound Δ+1 (0 for edgeless graphs)."""
    if g.n == 0:
        raise ValueError("graph must be non-empty")
    delta = g.max_degree()
    if delta == 0:
        return LambdaResult(0, Labeling((0,) * g.n, 0), None)
    k = delta + 1
    last: Infeasible = Infeasible(k - 1, 0, "degree bound")
    while True:
        res = k_feasible(g, k, budget=budget, workers=workers)
        if isinstance(res, Labeling):
            assert not verify(g, res)
            return LambdaResult(k, res, last)
        last = res
        k += 1
