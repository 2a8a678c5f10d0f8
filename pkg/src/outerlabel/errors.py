"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when an edge list or graph6 string cannot be parsed."""


class NotOuterplanar(ValueError):
    """Raised when a block admits no outerplanar embedding."""


class MaxDegreeExceeded(ValueError):
    """Raised when the labeler receives a graph with a vertex of degree > 3."""


class PartialLabelingError(ValueError):
    """Raised when an operation needs a total labeling but got a partial one."""


class NoExtension(RuntimeError):
    """An extension step found no admissible labels.

    The existence results behind the labeler guarantee this never happens on
    valid input, so seeing it means an internal bug.
    """


class BudgetExceeded(RuntimeError):
    """The exact solver hit its node limit before reaching a verdict."""

    def __init__(self, k: int, nodes: int) -> None:
        super().__init__(f"node budget exhausted at k={k} after {nodes} nodes")
        self.k = k
        self.nodes = nodes
