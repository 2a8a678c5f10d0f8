"""Extension engines: seeding a face, growing across a chord, entering a
block from a branch, and filling a branch.

The face-level engines are certified searches (see :mod:`.cyclesearch`).
They keep one invariant: every labelled window that can still receive a
face lies in :data:`SAFE`.  Plain path-extendability is not enough for that.
Ten extendable windows extend to some face length only by creating
non-extendable windows on the new boundary, so the engine avoids creating
them.  :func:`safe_windows_fixpoint` recomputes the set from scratch.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from itertools import product

from .cyclesearch import Constraint, solve_cycle
from .errors import NoExtension
from .extendability import (
    EVEN,
    LABELS,
    ODD,
    Window4,
    apply_pattern,
    is_cycle_extendable,
    window_extendable,
)

# Extendable windows that can still trap a later face.
TRAP_WINDOWS: frozenset[Window4] = frozenset(
    {
        (1, 4, 0, 3),
        (1, 6, 0, 5),
        (2, 6, 0, 4),
        (3, 0, 4, 1),
        (3, 0, 6, 3),
        (3, 6, 0, 3),
        (3, 6, 2, 5),
        (4, 0, 6, 2),
        (5, 0, 6, 1),
        (5, 2, 6, 3),
    }
)


def is_safe_window(w: Window4) -> bool:
    return window_extendable(w) and w not in TRAP_WINDOWS


@lru_cache(maxsize=1)
def extendable_windows() -> frozenset[Window4]:
    out = set()
    for w in product(LABELS, repeat=4):
        w1, w2, w3, w4 = w
        if abs(w1 - w2) < 2 or abs(w2 - w3) < 2 or abs(w3 - w4) < 2:
            continue
        if w1 == w3 or w2 == w4:
            continue
        if window_extendable(w):
            out.add(w)
    return frozenset(out)


def SAFE() -> frozenset[Window4]:
    return extendable_windows() - TRAP_WINDOWS


def safe_windows_fixpoint(max_face: int = 12) -> frozenset[Window4]:
    """Greatest set S of extendable windows such that every window in S
    extends to every face length ``3..max_face`` with all new interior
    windows in S.  Independent of :data:`TRAP_WINDOWS`."""
    current = set(extendable_windows())
    while True:
        keep = {
            w
            for w in current
            if all(
                _extend(w, l, lambda x: x in current) is not None
                for l in range(3, max_face + 1)
            )
        }
        if keep == current:
            return frozenset(current)
        current = keep


# ---------------------------------------------------------------------------
# constraint helpers
# ---------------------------------------------------------------------------


def _window_constraint(positions: tuple[int, int, int, int], pred) -> Constraint:
    return (positions, lambda labs: pred(labs))


def _edge_constraints(l: int, edges, pred) -> list[Constraint]:
    """Window predicate on cycle edges ``e`` (joining positions e, e+1)."""
    out = []
    for e in edges:
        pos = ((e - 1) % l, e % l, (e + 1) % l, (e + 2) % l)
        out.append(_window_constraint(pos, pred))
    return out


# ---------------------------------------------------------------------------
# seed
# ---------------------------------------------------------------------------


def seed_face_labeling(l: int) -> list[int]:
    """Cycle labels for the first face of a block.

    The labeling is type-1 cycle-extendable unless ``l % 3 == 2``; then only
    the wrap edge (last vertex, first vertex, second vertex, third vertex)
    fails, and callers rotate it onto an edge that carries no chord.
    """
    if l < 3:
        raise ValueError("face length must be at least 3")
    r = l % 3
    if r == 0:
        out = apply_pattern(l, (0, 2, 4))
    elif r == 1:
        out = [3] + apply_pattern(l - 1, (6, 4, 0))
    else:
        out = [3, 1] + apply_pattern(l - 2, (4, 2, 0))
    if r != 2:
        assert is_cycle_extendable(out, 1)
    return out


def seed_unsafe_edges(labels: Sequence[int]) -> list[int]:
    """Cycle edges ``i`` (joining i, i+1) whose window is not safe."""
    l = len(labels)
    return [
        i
        for i in range(l)
        if not is_safe_window(
            (labels[(i - 1) % l], labels[i], labels[(i + 1) % l], labels[(i + 2) % l])
        )
    ]


def search_seed(l: int, required_edges: Sequence[int] | None = None) -> list[int] | None:
    """Min-lex cycle labeling whose windows on ``required_edges`` (default:
    all) are safe."""
    edges = range(l) if required_edges is None else required_edges
    allowed = [list(LABELS)] * l
    return solve_cycle(l, allowed, _edge_constraints(l, edges, is_safe_window))


# ---------------------------------------------------------------------------
# growing across a chord
# ---------------------------------------------------------------------------


def _extend(window: Window4, l: int, good, edges=None) -> list[int] | None:
    v1, a, b, v2 = window
    if edges is None:
        edges = range(2, l - 1)
    allowed: list[list[int]] = [[a], [b]] + [list(LABELS) for _ in range(l - 2)]
    allowed[2] = [x for x in LABELS if x != v2]
    allowed[l - 1] = [x for x in allowed[l - 1] if x != v1]
    sol = solve_cycle(l, allowed, _edge_constraints(l, edges, good))
    return None if sol is None else sol[2:]


def extend_over_face(
    window: Window4, l: int, *, good=is_safe_window, required_edges=None
) -> list[int]:
    """Labels ``u3..ul`` for a face ``u1 u2 ... ul`` hanging off the labelled
    chord ``u1 u2``; ``window`` is ``(f(v1), f(u1), f(u2), f(v2))``.

    For ``l >= 4`` the window of every new edge satisfies ``good``, so the
    path ``u2 u3 ... ul u1`` is path-extendable.  A triangle only needs a
    valid apex.  ``required_edges`` (cycle edge ``e`` joins positions ``e``
    and ``e + 1``, with ``u1`` at position 0) narrows the window demand.
    """
    if l < 3:
        raise ValueError("face length must be at least 3")
    if any(x is None for x in window[1:3]):
        raise ValueError("the shared edge must be labelled")
    if None not in window and not window_extendable(window):
        raise ValueError(f"window {window} is not extendable")
    sol = _extend(window, l, good, required_edges)
    if sol is None:
        raise NoExtension(f"no extension of {window} to a face of length {l}")
    return sol


# ---------------------------------------------------------------------------
# entering a block
# ---------------------------------------------------------------------------


def dummy_label(near: int, far: int | None) -> int:
    """Stand-in for a missing neighbour of a branch vertex labelled ``near``
    whose other neighbour carries ``far``: same parity as ``near``, avoiding
    both, smallest first."""
    pool = EVEN if near % 2 == 0 else ODD
    for x in pool:
        if x != near and x != far:
            return x
    raise AssertionError("parity class too small")


def entry_face_search(
    prefix: tuple[int | None, int, int | None],
    l: int,
    *,
    good=is_safe_window,
    required_edges=None,
) -> list[int]:
    """Labels ``u1..ul`` of the face through the entry vertex ``u2``.

    ``u2`` is adjacent to the labelled vertex carrying ``prefix[1]``; the
    other prefix entries sit at distance two from ``u2``.  Every face edge
    except ``(u1, u2)`` gets a window satisfying ``good``, which implies
    type-2 cycle-extendability with start ``u1``.
    """
    p1, p2, p3 = prefix
    if l < 3:
        raise ValueError("face length must be at least 3")
    allowed = [list(LABELS) for _ in range(l)]
    allowed[1] = [x for x in LABELS if abs(x - p2) >= 2 and x != p1 and x != p3]
    allowed[0] = [x for x in LABELS if x != p2]
    allowed[2] = [x for x in LABELS if x != p2]
    edges = range(1, l) if required_edges is None else required_edges
    sol = solve_cycle(l, allowed, _edge_constraints(l, edges, good))
    if sol is None:
        raise NoExtension(f"no entry labeling for prefix {prefix} and face length {l}")
    return sol


# ---------------------------------------------------------------------------
# branches
# ---------------------------------------------------------------------------


def fill_branch(a1: int | None, a2: int | None, b: int, q: int) -> list[int]:
    """Greedy labels for the ``q - 1`` new vertices of a branch leaving a
    vertex labelled ``b`` whose other neighbours carry ``a1`` and ``a2``."""
    if q < 1:
        raise ValueError("branch length must be at least 1")
    out: list[int] = []
    prev2, prev = None, b
    far = {x for x in (a1, a2) if x is not None}
    for i in range(q - 1):
        banned = {prev - 1, prev, prev + 1}
        banned |= far if i == 0 else {prev2}
        x = min(c for c in LABELS if c not in banned)
        out.append(x)
        prev2, prev = prev, x
    return out
