"""Command-line interface.

Exit codes: 0 success, 1 verification failure (or a failed self-test
check), 2 unreadable input, 3 graph outside the supported class (not
outerplanar, or a vertex of degree above 3), 4 internal extension failure,
5 exact-solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import selftest
from .errors import (
    BudgetExceeded,
    GraphFormatError,
    MaxDegreeExceeded,
    NoExtension,
    NotOuterplanar,
)
from .exact import DEFAULT_BUDGET, Infeasible, k_feasible, lambda_exact
from .generators import enumerate_2conn_outerplanar, gen_gl, random_outerplanar
from .graph import Graph, format_edge_list, from_graph6, parse_edge_list, to_graph6
from .labeler import MODES, Strategy, label_graph, to_dot
from .labeling import verify

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_CLASS, EXIT_EXTENSION, EXIT_BUDGET = range(6)


class _InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------


def parse_graph_text(text: str) -> tuple[Graph, dict | None]:
    """Edge list, graph6, or a labeling JSON document carrying ``graph6``.

    Returns the graph and the JSON document when there was one.
    """
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("empty input")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad JSON: {exc}") from None
        if not isinstance(doc, dict) or "graph6" not in doc:
            raise GraphFormatError("JSON input needs a 'graph6' field")
        return from_graph6(doc["graph6"]), doc
    lines = [ln.split("#", 1)[0].strip() for ln in stripped.splitlines()]
    first = next((ln for ln in lines if ln), "")
    if len(first.split()) == 2:
        return parse_edge_list(text), None
    return from_graph6(first), None


def read_graph(args: argparse.Namespace) -> tuple[Graph, dict | None]:
    given = [x for x in (args.graph6, args.file, args.source) if x is not None]
    if len(given) != 1:
        raise _InputError("give exactly one input: --graph6 STR, -f PATH or -")
    if args.graph6 is not None:
        return from_graph6(args.graph6), None
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _InputError(str(exc)) from None
    elif args.source == "-":
        text = sys.stdin.read()
    else:
        raise _InputError(f"unknown input {args.source!r}; use - for standard input")
    return parse_graph_text(text)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", nargs="?", help="'-' to read standard input")
    p.add_argument("--graph6", metavar="STR", help="inline graph6 code")
    p.add_argument("-f", "--file", metavar="PATH", help="edge-list, graph6 or labeling JSON file")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_label(args: argparse.Namespace) -> int:
    g, _ = read_graph(args)
    st = Strategy(args.strategy, strict=args.strict)
    f = label_graph(g, st)
    if args.format == "dot":
        print(to_dot(g, f), end="")
    elif args.format == "text":
        for v, x in enumerate(f.labels):
            print(f"{v} {x}")
        print(f"span {f.span}")
    else:
        print(f.to_json(span=f.span, graph6=to_graph6(g).decode()))
    if args.telemetry:
        print(json.dumps(dict(st.telemetry)), file=sys.stderr)
    return EXIT_OK


def cmd_lambda(args: argparse.Namespace) -> int:
    g, _ = read_graph(args)
    if g.n == 0:
        raise _InputError("the graph has no vertices")
    if args.k is not None:
        res = k_feasible(g, args.k, budget=args.budget)
        if isinstance(res, Infeasible):
            print(f"infeasible at k={res.k} after {res.nodes} nodes")
        else:
            print(f"feasible at k={args.k}")
            print(res.to_json())
        return EXIT_OK
    r = lambda_exact(g, budget=args.budget, workers=args.workers)
    cert = r.certificate
    if args.format == "json":
        doc = {
            "lambda": r.lambda_,
            "witness": r.witness.to_dict(),
            "certificate": None
            if cert is None
            else {"k": cert.k, "nodes": cert.nodes, "reason": cert.reason},
        }
        print(json.dumps(doc))
        return EXIT_OK
    print(r.lambda_)
    print(f"witness {r.witness.to_json()}")
    if cert is None:
        print("certificate none (no edges)")
    else:
        print(f"certificate k={cert.k} infeasible, {cert.nodes} nodes ({cert.reason})")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, doc = read_graph(args)
    if args.labeling is not None:
        try:
            with open(args.labeling, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _InputError(f"cannot read labeling: {exc}") from None
    if doc is None:
        raise _InputError("no labeling given; pass --labeling PATH or a labeling JSON with graph6")
    labels = doc.get("labels") if isinstance(doc, dict) else None
    if not isinstance(labels, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
        raise _InputError("labeling JSON needs an integer 'labels' list")
    k = args.k if args.k is not None else doc.get("k", 6)
    problems = [f"vertex {v} label {x} outside [0, {k}]" for v, x in enumerate(labels) if not 0 <= x <= k]
    if len(labels) != g.n:
        problems.append(f"{len(labels)} labels for {g.n} vertices")
    else:
        problems += [str(v) for v in verify(g, labels)]
    if problems:
        for p in problems:
            print(p)
        print(f"{len(problems)} violation(s)")
        return EXIT_VERIFY
    print(f"ok span={max(labels, default=0) - min(labels, default=0)}")
    return EXIT_OK


def _gen_graph(args: argparse.Namespace) -> Graph:
    fam, n = args.family, args.param
    if fam == "gl":
        return gen_gl(n).graph
    if fam == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "path":
        if n < 1:
            raise ValueError("a path needs at least one vertex")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    return random_outerplanar(n, args.seed)


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = _gen_graph(args)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if args.format == "graph6":
        print(to_graph6(g).decode())
    else:
        print(format_edge_list(g), end="")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        stream = enumerate_2conn_outerplanar(args.n)
        for g in stream:
            print(to_graph6(g).decode())
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    results = selftest.run(quick=args.quick)
    failed = [c for c in results if not c.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="outerlabel", description="Span-6 L(2,1)-labelings of outerplanar graphs with Δ ≤ 3.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="label a graph with labels in [0, 6]")
    _add_input(p)
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--strategy", choices=MODES, default="paper")
    p.add_argument("--strict", action="store_true", help="fail instead of escalating to exact search")
    p.add_argument("--telemetry", action="store_true", help="print step counters to stderr")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("lambda", help="exact λ with witness and certificate")
    _add_input(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--k", type=int, help="only decide feasibility at this k")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("verify", help="check a labeling")
    _add_input(p)
    p.add_argument("--labeling", metavar="PATH", help="labeling JSON (otherwise read from the input JSON)")
    p.add_argument("--k", type=int, help="largest allowed label (default: the JSON's k)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("family", choices=("gl", "cycle", "path", "random"))
    p.add_argument("param", type=int, help="l for gl, vertex count otherwise")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("edges", "graph6"), default="edges")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="stream 2-connected outerplanar Δ≤3 graphs as graph6")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, _InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotOuterplanar as exc:
        print(f"error: not outerplanar: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except MaxDegreeExceeded as exc:
        print(f"error: maximum degree exceeded: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except NoExtension as exc:
        print(f"error: extension failed: {exc}", file=sys.stderr)
        return EXIT_EXTENSION
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
