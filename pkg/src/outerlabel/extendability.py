"""Executable forms of path- and cycle-extendability for span-6 labelings.

A labelled path is *extendable* when every way of gluing a path of length 2
(a triangle apex) or length 3 (two new vertices closing a 4-cycle) across
vertex-disjoint interior edges can be labelled within ``[0, 6]``.  Sites are
pairwise at least two edges apart, so new vertices at different sites are at
distance >= 3 from each other and the condition splits into one local test
per edge, on the 4-window ``(w1, w2, w3, w4)`` around that edge.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

LABELS = range(7)
EVEN = (0, 2, 4, 6)
ODD = (1, 3, 5)

# (w1, w2, w3, w4); None marks an absent end (no constraint).
Window4 = tuple[int | None, int | None, int | None, int | None]


def available_neighbor_labels(x: int) -> frozenset[int]:
    """Labels of the opposite parity class that may sit next to ``x``."""
    if not 0 <= x <= 6:
        raise ValueError(f"label {x} outside [0, 6]")
    pool = EVEN if x % 2 else ODD
    return frozenset(y for y in pool if abs(x - y) >= 2)


@lru_cache(maxsize=None)
def triangle_attach_options(w: Window4) -> frozenset[int]:
    """Labels for a new vertex adjacent to both middle vertices ``w2, w3``."""
    w1, w2, w3, w4 = w
    return frozenset(
        c
        for c in LABELS
        if abs(c - w2) >= 2 and abs(c - w3) >= 2 and c != w1 and c != w4
    )


@lru_cache(maxsize=None)
def square_attach_options(w: Window4) -> frozenset[tuple[int, int]]:
    """Label pairs for a new path ``w2 - c1 - c2 - w3``."""
    w1, w2, w3, w4 = w
    first = [c for c in LABELS if abs(c - w2) >= 2 and c != w1 and c != w3]
    second = [c for c in LABELS if abs(c - w3) >= 2 and c != w4 and c != w2]
    return frozenset((a, b) for a in first for b in second if abs(a - b) >= 2)


@lru_cache(maxsize=None)
def window_extendable(w: Window4) -> bool:
    return bool(triangle_attach_options(w)) and bool(square_attach_options(w))


def _path_valid(seq: Sequence[int]) -> bool:
    for i in range(len(seq) - 1):
        if abs(seq[i] - seq[i + 1]) < 2:
            return False
    for i in range(len(seq) - 2):
        if seq[i] == seq[i + 2]:
            return False
    return True


def _cycle_valid(seq: Sequence[int]) -> bool:
    n = len(seq)
    for i in range(n):
        if abs(seq[i] - seq[(i + 1) % n]) < 2:
            return False
        if n > 3 and seq[i] == seq[(i + 2) % n]:
            return False
    return True


def _require_total(seq: Sequence[int | None]) -> None:
    if any(x is None for x in seq):
        from .errors import PartialLabelingError

        raise PartialLabelingError("extendability needs every vertex labelled")
    for x in seq:
        if not 0 <= x <= 6:
            raise ValueError(f"label {x} outside [0, 6]")


def is_path_extendable(seq: Sequence[int]) -> bool:
    """``seq`` labels the path ``u, u_1, ..., u_l, v`` (ends included, l >= 2).

    True iff the labeling is a valid 6-labeling of the path and every
    interior edge ``(u_i, u_{i+1})``, ``1 <= i <= l-1``, admits both a triangle
    and a square attachment.
    """
    _require_total(seq)
    if len(seq) < 4:
        raise ValueError("path needs at least four vertices (l >= 2)")
    if not _path_valid(seq):
        return False
    return all(window_extendable(tuple(seq[i - 1 : i + 3])) for i in range(1, len(seq) - 2))


def cycle_edge_window(seq: Sequence[int], i: int) -> Window4:
    """Window around the cyclic edge ``(seq[i], seq[i+1])``."""
    n = len(seq)
    return (seq[(i - 1) % n], seq[i], seq[(i + 1) % n], seq[(i + 2) % n])


def is_cycle_extendable(seq: Sequence[int], kind: int = 1, start: int = 0) -> bool:
    """Cycle extendability of type 1 or 2.

    ``seq`` lists the cycle in order; ``start`` is the index of the starting
    vertex ``u_1``.  Type 2 exempts the two edges incident to ``u_1``.
    """
    _require_total(seq)
    n = len(seq)
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    if kind not in (1, 2):
        raise ValueError("type must be 1 or 2")
    if not _cycle_valid(seq):
        return False
    rot = list(seq[start:]) + list(seq[:start])
    # edge j joins rot[j], rot[j+1]; type 2 skips j = 0 and j = n-1
    edges = range(n) if kind == 1 else range(1, n - 1)
    return all(window_extendable(cycle_edge_window(rot, j)) for j in edges)


def validate_pattern(t: Sequence[int]) -> tuple[int, int, int]:
    if len(t) != 3:
        raise ValueError("a pattern has three labels")
    if any(x not in EVEN for x in t):
        bad = next(x for x in t if x not in EVEN)
        raise ValueError(f"{bad} not in {{0,2,4,6}}")
    if len(set(t)) != 3:
        raise ValueError("pattern labels must be distinct")
    return (t[0], t[1], t[2])


def apply_pattern(count: int, t: Sequence[int]) -> list[int]:
    """``count`` labels repeating ``a b c``."""
    a, b, c = validate_pattern(t)
    if count < 0:
        raise ValueError("count must be non-negative")
    return [(a, b, c)[i % 3] for i in range(count)]
