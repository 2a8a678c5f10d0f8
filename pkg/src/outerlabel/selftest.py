"""The acceptance checks, runnable from the CLI or the test suite.

Each check returns a :class:`Check`.  ``quick=True`` shrinks the sample
sizes so the whole report takes a few seconds.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass
from itertools import permutations, product

from .engine import fill_branch
from .exact import lambda_exact
from .extendability import EVEN, apply_pattern, is_cycle_extendable, is_path_extendable
from .generators import enumerate_2conn_outerplanar, gen_gl, random_outerplanar
from .graph import Graph
from .labeler import Strategy, label_graph
from .labeling import verify
from .oracles import brute_path_extendable

BAD_WINDOWS = ((4, 1, 3, 0), (0, 2, 4, 6), (4, 1, 6, 3), (5, 1, 4, 6), (6, 1, 4, 2))


@dataclass(frozen=True)
class Check:
    criterion: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.criterion}. {self.name}: {self.detail}"


# ---------------------------------------------------------------------------


def check_extremal(ls=(4, 5, 7, 8)) -> Check:
    notes, ok = [], True
    for l in ls:
        g = gen_gl(l).graph
        t = time.perf_counter()
        res = lambda_exact(g)
        dt = time.perf_counter() - t
        cert = res.certificate
        good = (
            res.lambda_ == 6
            and cert is not None
            and cert.k == 5
            and cert.reason == "exhaustive"
            and not verify(g, res.witness)
        )
        ok &= good
        notes.append(f"G({l}) λ={res.lambda_} k=5 nodes={cert.nodes if cert is not None else '-'} {dt:.2f}s")
    return Check(1, "extremal family λ(G(l)) = 6", ok, "; ".join(notes))


def check_corpus(n_max: int = 12) -> Check:
    st = Strategy("paper")
    total = bad = 0
    for n in range(3, n_max + 1):
        for g in enumerate_2conn_outerplanar(n):
            total += 1
            f = label_graph(g, st)
            if verify(g, f) or f.span > 6:
                bad += 1
    esc = sum(st.telemetry[k] for k in ("block_escalations", "exact_escalations", "no_extension"))
    return Check(
        2,
        "constructive bound on the dissection corpus",
        bad == 0 and esc == 0,
        f"{total} graphs n=3..{n_max}, {bad} bad, {esc} escalations",
    )


def check_bound(n_max: int = 10) -> Check:
    total = bad = 0
    worst = 0
    for n in range(3, n_max + 1):
        for g in enumerate_2conn_outerplanar(n):
            total += 1
            lam = lambda_exact(g).lambda_
            span = label_graph(g).span
            worst = max(worst, lam)
            if not (lam <= 6 and lam <= span):
                bad += 1
    return Check(3, "λ ≤ 6 and λ ≤ constructive span", bad == 0, f"{total} graphs, max λ={worst}, {bad} bad")


def _valid_path(s) -> bool:
    return all(abs(s[i] - s[i + 1]) >= 2 for i in range(len(s) - 1)) and all(
        s[i] != s[i + 2] for i in range(len(s) - 2)
    )


def _valid_cycle(s) -> bool:
    n = len(s)
    return all(abs(s[i] - s[(i + 1) % n]) >= 2 for i in range(n)) and all(
        s[i] != s[(i + 2) % n] for i in range(n)
    )


def pattern_claims(ks=(1, 2, 3)) -> dict[str, list]:
    """Counterexamples to the three pattern claims read literally: any
    valid labels on the free vertices (path ends, or ``u_2`` of the type-2
    cycle) keep the predicate true."""
    out: dict[str, list] = {"path": [], "type1": [], "type2": []}
    for t in permutations(EVEN, 3):
        for k in ks:
            body = apply_pattern(3 * k, t)
            for u, v in product(range(7), repeat=2):
                s = [u, *body, v]
                if _valid_path(s) and not is_path_extendable(s):
                    out["path"].append((t, k, u, v))
            if not is_cycle_extendable(body, 1):
                out["type1"].append((t, k))
            for x in range(7):
                c = [body[-1], x, *body[:-1]]
                if _valid_cycle(c) and not is_cycle_extendable(c, 2, 0):
                    out["type2"].append((t, k, x))
    return out


def check_fidelity() -> Check:
    windows_ok = all(not is_path_extendable(w) for w in BAD_WINDOWS)
    cex = pattern_claims()
    type2_triples = sorted({c[0] for c in cex["type2"]})
    ok = windows_ok and not any(cex.values())
    detail = (
        f"bad windows rejected={windows_ok}; counterexamples path={len(cex['path'])} "
        f"type1={len(cex['type1'])} type2={len(cex['type2'])} "
        f"(type-2 fails for {len(type2_triples)}/24 triples)"
    )
    return Check(4, "extendability fidelity", ok, detail)


def check_oracle(samples: int = 100_000, seed: int = 2024) -> Check:
    dis = 0
    for s in product(range(7), repeat=5):
        dis += brute_path_extendable(s) != is_path_extendable(s)
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        s = [rng.randrange(7) for _ in range(rng.randint(6, 9))]
        b = brute_path_extendable(s)
        hits += b
        dis += b != is_path_extendable(s)
    return Check(
        5,
        "path predicate vs brute-force oracle",
        dis == 0,
        f"7^5 + {samples} random paths, {hits} random positives, {dis} disagreements",
    )


def branch_context(a1: int | None, a2: int | None, b: int, labels: list[int]) -> tuple[Graph, list[int]]:
    """Star at ``b`` (its two other neighbours) plus the filled branch."""
    vs = [b] + [x for x in (a1, a2) if x is not None]
    edges = [(0, i) for i in range(1, len(vs))]
    prev = 0
    for x in labels:
        vs.append(x)
        edges.append((prev, len(vs) - 1))
        prev = len(vs) - 1
    return Graph.from_edges(len(vs), edges), vs


def check_branches(samples: int = 100_000, seed: int = 7) -> Check:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        b = rng.randrange(7)
        near = [x for x in range(7) if abs(x - b) >= 2]
        a1, a2 = rng.sample(near, 2)
        if rng.random() < 0.2:
            a2 = None
        if rng.random() < 0.1:
            a1 = None
        q = rng.randint(1, 50)
        out = fill_branch(a1, a2, b, q)
        g, labs = branch_context(a1, a2, b, out)
        if len(out) != q - 1 or verify(g, labs):
            bad += 1
    return Check(6, "branch greedy totality", bad == 0, f"{samples} instances, {bad} bad")


def check_scale(seeds: int = 100, n_max: int = 1000) -> Check:
    bad = 0
    rows = []
    step = max(n_max // seeds, 1)
    for s in range(seeds):
        n = step * (s + 1)
        g = random_outerplanar(n, s)
        t = time.perf_counter()
        f = label_graph(g)
        dt = time.perf_counter() - t
        if verify(g, f) or f.span > 6:
            bad += 1
        rows.append((n, dt))
    per = [dt / n * 1000 for n, dt in rows if n >= 100] or [0.0]
    detail = (
        f"{seeds} graphs n={rows[0][0]}..{rows[-1][0]}, {bad} bad; "
        f"ms/vertex min={min(per):.3f} max={max(per):.3f}; n={rows[-1][0]} took {rows[-1][1]:.2f}s"
    )
    return Check(7, "random outerplanar scale", bad == 0, detail)


def check_small_values() -> Check:
    k2 = Graph.from_edges(2, [(0, 1)])
    c3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    k4e = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    got = tuple(lambda_exact(g).lambda_ for g in (k2, c3, k4e))
    return Check(8, "small exact values", got == (2, 4, 5), f"edge, C3, K4-e -> {got}")


def checks(quick: bool = False) -> list[Callable[[], Check]]:
    if quick:
        return [
            lambda: check_extremal((4, 5)),
            lambda: check_corpus(9),
            lambda: check_bound(8),
            check_fidelity,
            lambda: check_oracle(10_000),
            lambda: check_branches(10_000),
            lambda: check_scale(20, 200),
            check_small_values,
        ]
    return [
        check_extremal,
        check_corpus,
        check_bound,
        check_fidelity,
        check_oracle,
        check_branches,
        check_scale,
        check_small_values,
    ]


def run(quick: bool = False, echo: Callable[[str], None] | None = print) -> list[Check]:
    out = []
    for fn in checks(quick):
        c = fn()
        out.append(c)
        if echo:
            echo(c.line())
    return out
