"""Span-6 L(2,1)-labelings of outerplanar graphs with maximum degree 3."""

from __future__ import annotations

from .errors import (
    BudgetExceeded,
    GraphFormatError,
    MaxDegreeExceeded,
    NoExtension,
    NotOuterplanar,
    PartialLabelingError,
)
from .exact import Infeasible, LambdaResult, k_feasible, lambda_exact
from .generators import enumerate_2conn_outerplanar, gen_gl, random_outerplanar
from .graph import Graph, from_graph6, parse_edge_list, to_graph6
from .labeler import Strategy, label_graph
from .labeling import Labeling, verify

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphFormatError",
    "Infeasible",
    "LambdaResult",
    "Labeling",
    "MaxDegreeExceeded",
    "NoExtension",
    "NotOuterplanar",
    "PartialLabelingError",
    "Strategy",
    "enumerate_2conn_outerplanar",
    "from_graph6",
    "gen_gl",
    "k_feasible",
    "label_graph",
    "lambda_exact",
    "parse_edge_list",
    "random_outerplanar",
    "to_graph6",
    "verify",
]
