"""Labelings, the L(p,q) verifier and the Labeling JSON form."""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import PartialLabelingError
from .graph import Graph


@dataclass(frozen=True)
class Labeling:
    """Vertex labels in ``[0, k]``; ``None`` marks an unassigned vertex."""

    labels: tuple[int | None, ...]
    k: int = 6

    def __post_init__(self) -> None:
        for x in self.labels:
            if x is not None and not 0 <= x <= self.k:
                raise ValueError(f"label {x} outside [0, {self.k}]")

    @classmethod
    def of(cls, labels: Sequence[int | None], k: int | None = None) -> Labeling:
        present = [x for x in labels if x is not None]
        if k is None:
            k = max(present, default=0)
        return cls(tuple(labels), k)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int | None:
        return self.labels[v]

    @property
    def is_total(self) -> bool:
        return all(x is not None for x in self.labels)

    @property
    def span(self) -> int:
        present = [x for x in self.labels if x is not None]
        return max(present) - min(present) if present else 0

    def complement(self) -> Labeling:
        return Labeling(tuple(None if x is None else self.k - x for x in self.labels), self.k)

    # -- JSON ---------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"k": self.k, "labels": list(self.labels)}

    def to_json(self, **extra) -> str:
        doc = self.to_dict()
        doc.update(extra)
        return json.dumps(doc, sort_keys=False)

    @classmethod
    def from_dict(cls, doc: dict) -> Labeling:
        try:
            k = doc["k"]
            labels = doc["labels"]
        except (KeyError, TypeError):
            raise ValueError("labeling JSON needs 'k' and 'labels'") from None
        if not isinstance(k, int) or not isinstance(labels, list):
            raise ValueError("labeling JSON has wrong field types")
        for x in labels:
            if x is not None and (not isinstance(x, int) or isinstance(x, bool)):
                raise ValueError(f"bad label {x!r}")
        return cls(tuple(labels), k)

    @classmethod
    def from_json(cls, text: str) -> Labeling:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    distance: int
    labels: tuple[int, int]

    def __str__(self) -> str:
        kind = "adjacent" if self.distance == 1 else "distance-2"
        return f"{kind} pair ({self.u}, {self.v}) labelled {self.labels[0]}, {self.labels[1]}"


def verify(g: Graph, f: Labeling | Sequence[int], p: int = 2, q: int = 1) -> list[Violation]:
    """All pairs breaking the L(p,q) separation conditions.

    Adjacent labels must differ by at least ``p``; labels at distance exactly
    two by at least ``q``.  Raises PartialLabelingError on unassigned vertices.
    """
    labels = f.labels if isinstance(f, Labeling) else tuple(f)
    if len(labels) != g.n:
        raise PartialLabelingError(f"labeling has {len(labels)} entries for {g.n} vertices")
    missing = [v for v, x in enumerate(labels) if x is None]
    if missing:
        raise PartialLabelingError(f"unassigned vertices: {missing[:10]}")
    out = []
    for u, v in g.sorted_edges():
        if abs(labels[u] - labels[v]) < p:
            out.append(Violation(u, v, 1, (labels[u], labels[v])))
    for u in range(g.n):
        for w in sorted(g.second_neighbors(u)):
            if u < w and abs(labels[u] - labels[w]) < q:
                out.append(Violation(u, w, 2, (labels[u], labels[w])))
    return out


def partial_conflicts(g: Graph, labels: Sequence[int | None]) -> list[Violation]:
    """Like :func:`verify` but only over pairs of assigned vertices (p=2, q=1)."""
    out = []
    for u, v in g.sorted_edges():
        a, b = labels[u], labels[v]
        if a is not None and b is not None and abs(a - b) < 2:
            out.append(Violation(u, v, 1, (a, b)))
    for u in range(g.n):
        if labels[u] is None:
            continue
        for w in g.second_neighbors(u):
            if u < w and labels[w] is not None and labels[u] == labels[w]:
                out.append(Violation(u, w, 2, (labels[u], labels[w])))
    return out
