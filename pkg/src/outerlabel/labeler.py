"""Span-6 L(2,1)-labeling of outerplanar graphs with maximum degree 3.

Each component is labelled outward from a root.  A root block gets a seed
face and grows face by face over its weak dual.  Branches are filled
greedily.  A block reached through a branch is entered through the face
holding its attachment vertex.

When the preferred step fails, the labeler escalates:

1. certified face search with every new window safe;
2. the same search with safe windows on chords only;
3. an exact solve of the block with its labelled surroundings fixed;
4. an exact solve of the whole component.

Steps 3 and 4 are counted in the telemetry.  ``strict=True`` raises
NoExtension instead of escalating past step 2.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from . import closed_forms
from .blocks import BlockDecomposition, block_decomposition
from .embedding import Face, OuterEmbedding, outer_embedding
from .engine import (
    dummy_label,
    entry_face_search,
    extend_over_face,
    fill_branch,
    is_safe_window,
    search_seed,
    seed_face_labeling,
    seed_unsafe_edges,
)
from .errors import MaxDegreeExceeded, NoExtension
from .exact import Infeasible, k_feasible
from .extendability import LABELS, Window4
from .graph import Edge, Graph, to_graph6
from .labeling import Labeling, partial_conflicts, verify

log = logging.getLogger(__name__)

MODES = ("paper", "search", "hybrid")
TELEMETRY_KEYS = (
    "face_searches",
    "fast_path_used",
    "fast_path_rejected",
    "chord_only_fallbacks",
    "block_escalations",
    "exact_escalations",
    "no_extension",
)


@dataclass
class Strategy:
    """How faces are labelled, plus counters of what actually happened.

    ``paper`` tries the closed-form constructions first and keeps them only
    if every window that can still host a face is safe.  ``search`` always
    runs the certified search.  ``hybrid`` uses the closed forms for seeds
    and entry faces and searches for everything else.
    """

    mode: str = "paper"
    strict: bool = False
    telemetry: Counter = field(default_factory=Counter)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown strategy {self.mode!r}; expected one of {MODES}")
        for k in TELEMETRY_KEYS:
            self.telemetry.setdefault(k, 0)

    def bump(self, key: str) -> None:
        self.telemetry[key] += 1

    @property
    def closed_form_faces(self) -> bool:
        return self.mode == "paper"

    @property
    def closed_form_seeds(self) -> bool:
        return self.mode in ("paper", "hybrid")


@dataclass
class Frontier:
    """Labelled state between steps: vertex labels, the window of every
    chord whose far face is still open, and the prefix of every block
    waiting to be entered."""

    labels: list[int | None]
    face_windows: dict[Edge, Window4] = field(default_factory=dict)
    block_prefixes: dict[int, tuple[int, int, int]] = field(default_factory=dict)

    def put(self, vertices: Sequence[int], values: Sequence[int]) -> None:
        for v, x in zip(vertices, values):
            self.labels[v] = x


class _Escalate(Exception):
    pass


# ---------------------------------------------------------------------------
# geometry helpers
# ---------------------------------------------------------------------------


def embed_block(g: Graph, vertices: Sequence[int]) -> OuterEmbedding:
    """Outer embedding of the block on ``vertices``, in ``g``'s vertex ids."""
    sub, back = g.induced(vertices)
    emb = outer_embedding(sub)

    def e(a: int, b: int) -> Edge:
        x, y = back[a], back[b]
        return (min(x, y), max(x, y))

    faces = tuple(
        Face(tuple(back[v] for v in f.boundary), {e(*k): t for k, t in f.shared_edges.items()})
        for f in emb.faces
    )
    return OuterEmbedding(
        tuple(back[v] for v in emb.outer_cycle),
        frozenset(e(a, b) for a, b in emb.chords),
        faces,
        emb.weak_dual,
    )


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _chord_positions(order: Sequence[int], chords: frozenset[Edge]) -> list[int]:
    l = len(order)
    return [i for i in range(l) if _edge(order[i], order[(i + 1) % l]) in chords]


def _windows_safe(labels: Sequence[int], edges: Sequence[int]) -> bool:
    l = len(labels)
    return all(
        is_safe_window((labels[(e - 1) % l], labels[e], labels[(e + 1) % l], labels[(e + 2) % l]))
        for e in edges
    )


def _orient(boundary: Sequence[int], first: int, second: int) -> list[int]:
    """The face boundary read from ``first`` towards its neighbour ``second``."""
    l = len(boundary)
    i = boundary.index(first)
    if boundary[(i + 1) % l] == second:
        return [boundary[(i + k) % l] for k in range(l)]
    assert boundary[(i - 1) % l] == second
    return [boundary[(i - k) % l] for k in range(l)]


def _neighbour_in(boundary: Sequence[int], v: int, other: int) -> int:
    l = len(boundary)
    i = boundary.index(v)
    a, b = boundary[(i - 1) % l], boundary[(i + 1) % l]
    return b if a == other else a


# ---------------------------------------------------------------------------
# special cases
# ---------------------------------------------------------------------------


def _is_k4_minus_e(g: Graph, verts: Sequence[int]) -> bool:
    if len(verts) != 4:
        return False
    inner = sum(1 for u, v in g.edges if u in verts and v in verts)
    return inner == 5


def k4_minus_e_labels(g: Graph, verts: Sequence[int]) -> dict[int, int]:
    """Degree-3 vertices (inside the block) get 0, 2; the other two 4, 5."""
    vs = set(verts)
    inner = {v: sum(1 for w in g.adjacency[v] if w in vs) for v in verts}
    hi = sorted(v for v in verts if inner[v] == 3)
    lo = sorted(v for v in verts if inner[v] == 2)
    return dict(zip(hi + lo, (0, 2, 4, 5)))


def _label_tree(g: Graph, comp: Sequence[int], labels: list[int | None]) -> None:
    """BFS greedy: each vertex takes the smallest label clear of every
    labelled vertex within distance two.  Under Δ ≤ 3 at most five labels
    are ever excluded."""
    root = comp[0]
    order = [root]
    seen = {root}
    i = 0
    while i < len(order):
        for w in g.adjacency[order[i]]:
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    for v in order:
        banned: set[int] = set()
        for w in g.adjacency[v]:
            if labels[w] is not None:
                banned |= {labels[w] - 1, labels[w], labels[w] + 1}
        for w in g.second_neighbors(v):
            if labels[w] is not None:
                banned.add(labels[w])
        labels[v] = min(x for x in LABELS if x not in banned)


# ---------------------------------------------------------------------------
# single steps
# ---------------------------------------------------------------------------


def _seed_labels(l: int, chord_edges: list[int], strategy: Strategy) -> list[int]:
    if strategy.closed_form_seeds:
        base = seed_face_labeling(l)
        for r in range(l):
            rot = base[-r:] + base[:-r] if r else list(base)
            if not set(seed_unsafe_edges(rot)) & set(chord_edges):
                strategy.bump("fast_path_used")
                return rot
        strategy.bump("fast_path_rejected")
    strategy.bump("face_searches")
    out = search_seed(l, chord_edges)
    if out is None:
        raise _Escalate(f"no seed for a face of length {l}")
    return out


def _child_labels(window: Window4, l: int, chord_edges: list[int], strategy: Strategy) -> list[int]:
    """Labels for u3..ul of a face hanging off a labelled chord."""
    if strategy.closed_form_faces:
        got = closed_forms.extend_face(window, l)
        if got is not None and _windows_safe([window[1], window[2], *got], chord_edges):
            strategy.bump("fast_path_used")
            return got
        strategy.bump("fast_path_rejected")
    strategy.bump("face_searches")
    try:
        return extend_over_face(window, l)
    except (NoExtension, ValueError):
        pass
    strategy.bump("chord_only_fallbacks")
    try:
        return extend_over_face(window, l, required_edges=chord_edges)
    except (NoExtension, ValueError) as exc:
        raise _Escalate(str(exc)) from None


def _entry_labels(
    prefix: tuple[int, int, int], boundary: Sequence[int], u2: int, chords, strategy: Strategy
) -> tuple[list[int], list[int]]:
    """Oriented boundary ``u1..ul`` (with ``u2`` second) and its labels."""
    l = len(boundary)
    i = boundary.index(u2)
    orders = [
        _orient(boundary, boundary[(i - 1) % l], u2),
        _orient(boundary, boundary[(i + 1) % l], u2),
    ]
    if strategy.closed_form_seeds:
        got = closed_forms.entry_face(prefix, l)
        if got is not None:
            for order in orders:
                if _windows_safe(got, _chord_positions(order, chords)):
                    strategy.bump("fast_path_used")
                    return order, got
        strategy.bump("fast_path_rejected")
    strategy.bump("face_searches")
    order = orders[0]
    try:
        return order, entry_face_search(prefix, l)
    except NoExtension:
        pass
    strategy.bump("chord_only_fallbacks")
    try:
        return order, entry_face_search(prefix, l, required_edges=_chord_positions(order, chords))
    except NoExtension as exc:
        raise _Escalate(str(exc)) from None


def attach_block(
    prefix: tuple[int | None, int, int | None],
    emb: OuterEmbedding,
    u2: int,
    strategy: Strategy | None = None,
) -> dict[int, int]:
    """Labels of the face through ``u2`` when a branch vertex labelled
    ``prefix[1]`` hangs off ``u2``.  Missing prefix ends get a dummy of the
    same parity as ``prefix[1]``."""
    strategy = strategy or Strategy()
    if any(u2 in c for c in emb.chords):
        raise ValueError(f"vertex {u2} lies on a chord; an attachment vertex needs block degree 2")
    p1, p2, p3 = prefix
    if p1 is None:
        p1 = dummy_label(p2, p3)
    if p3 is None:
        p3 = dummy_label(p2, p1)
    face = next(f for f in emb.faces if u2 in f.boundary)
    order, labs = _entry_labels((p1, p2, p3), face.boundary, u2, emb.chords, strategy)
    return dict(zip(order, labs))


# ---------------------------------------------------------------------------
# the pipeline
# ---------------------------------------------------------------------------


class _Run:
    def __init__(self, g: Graph, strategy: Strategy):
        self.g = g
        self.strategy = strategy
        self.front = Frontier([None] * g.n)
        self.dec: BlockDecomposition = block_decomposition(g)
        self.block_of = self.dec.block_of()
        self.emb: dict[int, OuterEmbedding] = {}

    @property
    def labels(self) -> list[int | None]:
        return self.front.labels

    def embedding(self, b: int) -> OuterEmbedding:
        if b not in self.emb:
            self.emb[b] = embed_block(self.g, self.dec.blocks[b])
        return self.emb[b]

    # -- blocks -------------------------------------------------------------

    def grow(self, emb: OuterEmbedding, start: int) -> None:
        """Label every face of the block reachable from the labelled face
        ``start`` over the weak dual."""
        adj = emb.dual_adjacency()
        done = {start}
        queue = [start]
        lab = self.labels
        while queue:
            fid = queue.pop(0)
            parent = emb.faces[fid].boundary
            for child in adj[fid]:
                if child in done:
                    continue
                done.add(child)
                queue.append(child)
                cb = emb.faces[child].boundary
                a, b = next(e for e, t in emb.faces[fid].shared_edges.items() if t == child)
                window = (lab[_neighbour_in(parent, a, b)], lab[a], lab[b], lab[_neighbour_in(parent, b, a)])
                self.front.face_windows[(a, b)] = window
                order = _orient(cb, a, b)
                chord_edges = [e for e in _chord_positions(order, emb.chords) if e != 0]
                new = _child_labels(window, len(order), chord_edges, self.strategy)
                self.front.put(order[2:], new)
                del self.front.face_windows[(a, b)]

    def label_root_block(self, b: int) -> None:
        verts = self.dec.blocks[b]
        if _is_k4_minus_e(self.g, verts):
            for v, x in k4_minus_e_labels(self.g, verts).items():
                self.labels[v] = x
            return
        emb = self.embedding(b)
        start = next((i for i, f in enumerate(emb.faces) if len(f) >= 4), 0)
        order = list(emb.faces[start].boundary)
        labs = _seed_labels(len(order), _chord_positions(order, emb.chords), self.strategy)
        self.front.put(order, labs)
        self.grow(emb, start)

    def enter_block(self, b: int, u2: int, v2: int) -> None:
        lab = self.labels
        others = [lab[w] for w in self.g.adjacency[v2] if w != u2 and lab[w] is not None]
        p2 = lab[v2]
        p1 = others[0] if others else None
        p3 = others[1] if len(others) > 1 else None
        if p1 is None:
            p1 = dummy_label(p2, p3)
        if p3 is None:
            p3 = dummy_label(p2, p1)
        self.front.block_prefixes[u2] = (p1, p2, p3)
        emb = self.embedding(b)
        fid = next(i for i, f in enumerate(emb.faces) if u2 in f.boundary)
        got = attach_block((p1, p2, p3), emb, u2, self.strategy)
        for v, x in got.items():
            lab[v] = x
        del self.front.block_prefixes[u2]
        self.grow(emb, fid)

    def exact_block(self, b: int) -> None:
        """Relabel block ``b`` exactly, keeping every labelled vertex
        outside it fixed."""
        g, lab = self.g, self.labels
        verts = set(self.dec.blocks[b])
        ctx = {w for v in verts for w in (*g.adjacency[v], *g.second_neighbors(v))}
        ctx = {w for w in ctx - verts if lab[w] is not None}
        sub, back = g.induced(verts | ctx)
        fixed = {i: lab[v] for i, v in enumerate(back) if v in ctx}
        res = k_feasible(sub, 6, fixed=fixed)
        if isinstance(res, Infeasible):
            raise _Escalate(f"block {b} has no completion in [0, 6]")
        for i, v in enumerate(back):
            if v in verts:
                lab[v] = res.labels[i]

    # -- components ---------------------------------------------------------

    def component(self, comp: list[int]) -> None:
        blocks = sorted({self.block_of[v] for v in comp if v in self.block_of})
        if not blocks:
            _label_tree(self.g, comp, self.labels)
            return
        self.run_block(blocks[0], None, None)
        # outward over branches, in a fixed order
        pending = self._exits(self.dec.blocks[blocks[0]])
        visited_branches: set[int] = set()
        while pending:
            j, s = pending.pop(0)
            if j in visited_branches:
                continue
            visited_branches.add(j)
            pending.extend(self.walk_branch(j, s))

    def run_block(self, b: int, u2: int | None, v2: int | None) -> None:
        try:
            if u2 is None:
                self.label_root_block(b)
            else:
                self.enter_block(b, u2, v2)
        except _Escalate as exc:
            if self.strategy.strict:
                self.strategy.bump("no_extension")
                raise NoExtension(str(exc)) from None
            self.strategy.bump("block_escalations")
            sub, _ = self.g.induced(self.dec.blocks[b])
            log.warning("block escalation (%s); block graph6 %s", exc, to_graph6(sub).decode())
            self.exact_block(b)

    def _exits(self, vertices) -> list[tuple[int, int]]:
        out = []
        for j, path in enumerate(self.dec.branches):
            for end in (path[0], path[-1]):
                if end in vertices:
                    out.append((j, end))
        return sorted(out)

    def walk_branch(self, j: int, s: int) -> list[tuple[int, int]]:
        """Label branch ``j`` away from its labelled end ``s``; returns
        the exits opened at the far end."""
        g, lab = self.g, self.labels
        path = list(self.dec.branches[j])
        if path[0] != s:
            path.reverse()
        t = path[-1]
        if lab[t] is not None:
            return []
        q = len(path) - 1
        near = [lab[w] for w in g.adjacency[s] if w != path[1] and lab[w] is not None]
        a1 = near[0] if near else None
        a2 = near[1] if len(near) > 1 else None
        if t in self.block_of:
            inner = fill_branch(a1, a2, lab[s], q)
            self.front.put(path[1:-1], inner)
            b = self.block_of[t]
            self.run_block(b, t, path[-2])
            return self._exits(self.dec.blocks[b])
        labs = fill_branch(a1, a2, lab[s], q + 1)
        self.front.put(path[1:], labs)
        return self._exits({t})


def label_graph(g: Graph, strategy: Strategy | None = None) -> Labeling:
    """A verified L(2,1)-labeling of ``g`` within ``[0, 6]``.

    Raises MaxDegreeExceeded or NotOuterplanar on unsupported input.
    """
    strategy = strategy or Strategy()
    if g.max_degree() > 3:
        v = max(range(g.n), key=g.degree)
        raise MaxDegreeExceeded(f"vertex {v} has degree {g.degree(v)} > 3")
    run = _Run(g, strategy)
    for b in range(len(run.dec.blocks)):
        run.embedding(b)  # reject non-outerplanar input before labelling
    for comp in g.components():
        run.component(comp)
        if partial_conflicts(g, run.labels):
            if strategy.strict:
                strategy.bump("no_extension")
                raise NoExtension(f"conflicts in the component of vertex {comp[0]}")
            strategy.bump("exact_escalations")
            sub, back = g.induced(comp)
            log.warning("component escalation; component graph6 %s", to_graph6(sub).decode())
            res = k_feasible(sub, 6)
            assert not isinstance(res, Infeasible), "every outerplanar Δ≤3 graph is 6-labelable"
            for i, v in enumerate(back):
                run.labels[v] = res.labels[i]
    out = Labeling(tuple(run.labels), 6)
    bad = verify(g, out)
    assert not bad, f"internal error: {bad[:3]}"
    return out


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def to_dot(g: Graph, f: Labeling, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{v}:{f.labels[v]}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
