"""Closed-form constructions for the two extension steps.

These encode a hand-written case analysis: explicit label patterns for
growing a face across a labelled chord, and for the face a branch enters.
Where the analysis leaves a choice open ("choose a label in S", "two
available labels a, b"), the driver walks the open choices in lexicographic
order and keeps the first outcome meeting the stated conclusion.  A case
whose every choice fails yields ``None``; the tests pin those cases down.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from itertools import product

from .extendability import (
    EVEN,
    ODD,
    Window4,
    available_neighbor_labels,
    is_cycle_extendable,
    is_path_extendable,
    triangle_attach_options,
    window_extendable,
)

Prefix = tuple[int, int, int]


def _odd(x: int) -> bool:
    return x % 2 == 1


def _nbrs(x: int) -> list[int]:
    return sorted(available_neighbor_labels(x))


def _pattern(count: int, t: Sequence[int]) -> list[int]:
    return [t[i % 3] for i in range(max(count, 0))]


class _Choices:
    """Replays a script of option indices; unscripted decisions take the
    first option."""

    def __init__(self, script: list[int]):
        self.script = script
        self.taken: list[tuple[int, int]] = []
        self.case = ""

    def take(self, options: Sequence):
        options = list(options)
        if not options:
            return None
        i = len(self.taken)
        k = self.script[i] if i < len(self.script) else 0
        self.taken.append((k, len(options)))
        return options[k]

    def pick(self, pool, *avoid) -> int | None:
        return self.take([x for x in sorted(pool) if x not in avoid])

    def next_script(self) -> list[int] | None:
        for j in range(len(self.taken) - 1, -1, -1):
            k, n = self.taken[j]
            if k + 1 < n:
                return [t[0] for t in self.taken[:j]] + [k + 1]
        return None


def _drive(fn: Callable, check: Callable, *args, limit: int = 4096):
    script: list[int] = []
    last_case = ""
    for _ in range(limit):
        ch = _Choices(script)
        out = fn(ch, *args)
        last_case = ch.case or last_case
        if out is not None and check(out):
            return out, ch.case
        nxt = ch.next_script()
        if nxt is None:
            break
        script = nxt
    return None, last_case


# ---------------------------------------------------------------------------
# a face u1 ... ul with pendants v1 (at u1) and v2 (at u2)
# ---------------------------------------------------------------------------


class _Face:
    def __init__(self, window: Window4, l: int):
        self.v1, u1, u2, self.v2 = window
        self.l = l
        self.u: list[int | None] = [None, u1, u2] + [None] * (l - 2)

    def __getitem__(self, i: int) -> int | None:
        return self.u[i]

    def put(self, i: int, x: int | None) -> None:
        if 3 <= i <= self.l:
            self.u[i] = x

    def fwd(self, i: int, j: int, t: Sequence[int]) -> None:
        for k, x in zip(range(i, j + 1), _pattern(j - i + 1, t)):
            self.put(k, x)

    def bwd(self, i: int, j: int, t: Sequence[int]) -> None:
        for k, x in zip(range(i, j - 1, -1), _pattern(i - j + 1, t)):
            self.put(k, x)

    def result(self) -> list[int] | None:
        tail = self.u[3:]
        if any(x is None for x in tail):
            return None
        return tail  # type: ignore[return-value]

    def consistent(self) -> bool:
        c = self.u[1:]
        l = self.l
        for i in range(l):
            a, b, d = c[i], c[(i + 1) % l], c[(i + 2) % l]
            if a is not None and b is not None and abs(a - b) < 2:
                return False
            if l > 3 and a is not None and d is not None and a == d:
                return False
        pairs = ((self.v1, c[-1]), (self.v1, c[1]), (self.v2, c[2 % l]), (self.v2, c[0]))
        return all(x is None or y is None or x != y for x, y in pairs)

    def bridge(self, ch: _Choices, i: int, j: int) -> bool:
        """Odd labels on consecutive positions i, j, chosen as for a
        four-vertex path whose two ends carry even labels."""
        ok = []
        for a, b in product(ODD, repeat=2):
            self.put(i, a)
            self.put(j, b)
            if self.consistent():
                ok.append((a, b))
        got = ch.take(ok)
        if got is None:
            self.put(i, None)
            self.put(j, None)
            return False
        self.put(i, got[0])
        self.put(j, got[1])
        return True


def _reflect(window: Window4) -> Window4:
    v1, u1, u2, v2 = window
    return (v2, u2, u1, v1)


def _mirrored(fn, ch: _Choices, window: Window4, l: int) -> list[int] | None:
    out = fn(ch, _reflect(window), l)
    return None if out is None else out[::-1]


# ---------------------------------------------------------------------------
# completion once u3 and ul carry even labels
# ---------------------------------------------------------------------------


def _complete_from_ends(ch: _Choices, window: Window4, l: int, a: int, b: int) -> list[int] | None:
    """At least one of u1, u2 odd; u3 = a and ul = b even; a == b iff
    l = 0 (mod 3).  The mirror case (only u2 odd) is reflected first."""
    F = _Face(window, l)
    u1, u2 = F[1], F[2]
    v1, v2 = F.v1, F.v2
    F.put(3, a)
    F.put(l, b)
    r = l % 3
    if _odd(u1) and _odd(u2):
        ch.case += "/ends:both-odd"
        if r == 2:
            c = ch.pick(EVEN, a, b)
            F.fwd(4, l, (c, b, a))
            F.put(l - 1, c)
        elif r == 1:
            c = ch.pick(EVEN, a, b)
            F.fwd(4, l - 1, (b, c, a))
        else:
            pair = ch.take([(x, y) for x in EVEN for y in EVEN if x != y and a not in (x, y)])
            b2, c2 = pair
            F.put(4, b2)
            F.put(5, c2)
            F.fwd(6, l - 1, (a, b2, c2))
        return F.result()
    if _odd(u2):
        out = _complete_from_ends(ch, _reflect(window), l, b, a)
        return None if out is None else out[::-1]
    ch.case += f"/ends:one-odd-r{r}"
    if r == 0:
        c = ch.pick(EVEN, a, u2)
        F.put(4, c)
        F.put(5, u2)
        F.fwd(6, l - 1, (a, c, u2))
        return F.result()
    if r == 1:
        F.fwd(4, l - 1, (b, u2, a))
        return F.result()
    if (u2, b) in {(0, 2), (2, 0), (4, 6), (6, 4)}:
        c = ch.pick(EVEN, a, b, u2)
        F.put(4, c)
        F.fwd(5, l - 1, (b, a, c))
        return F.result()
    if (u2, b) == (0, 6):
        if v2 != 5:
            F.put(3, 5)
            F.put(4, 1)
            F.fwd(5, l - 1, (6, 0, 2))
        elif v1 == 1:
            F.put(l, 5)
            F.put(l - 1, 2)
            F.put(l - 2, 4)
            F.bwd(l - 3, 3, (0, 2, 4))
        elif v1 == 5:
            F.put(l, 1)
            F.put(l - 1, 6)
            F.put(l - 2, 2)
            F.bwd(l - 3, 3, (0, 6, 2))
        return F.result()
    if (u2, b) == (6, 0):
        if v2 != 1:
            F.put(3, 1)
            F.put(4, 5)
            F.fwd(5, l - 1, (0, 4, 2))
        elif v1 == 5:
            F.put(3, 2)
            if l == 5:
                F.put(4, 4)
                F.put(5, 0)
            else:
                F.put(4, 5)
                F.put(5, 1)
                F.fwd(6, l, (6, 4, 0))
        elif v1 == 1:
            F.put(l, 5)
            F.put(l - 1, 0)
            F.put(l - 2, 4)
            F.bwd(l - 3, 3, (6, 0, 4))
        return F.result()
    return None


# ---------------------------------------------------------------------------
# l = 0 (mod 3) with an odd label on the chord
# ---------------------------------------------------------------------------


def _odd_even_ends(ch: _Choices, window: Window4, l: int, odd3: int, even_l: int) -> list[int] | None:
    """u3 odd and ul even already placed; l = 0 (mod 3)."""
    F = _Face(window, l)
    v1, u1, u2, v2 = window
    F.put(3, odd3)
    F.put(l, even_l)
    if _odd(u1) and _odd(u2):
        ch.case += "/claim:both-odd"
        spare = [x for x in _nbrs(odd3) if x not in available_neighbor_labels(u1)]
        a = ch.take(spare)
        if a is None:
            return None
        c = ch.pick(_nbrs(odd3), a)
        b = ch.pick(EVEN, even_l, a, c)
        if c is None or b is None:
            return None
        F.fwd(4, l, (a, b, even_l))
        return F.result()
    if _odd(u1):
        ch.case += f"/claim:u1-odd({u1},{odd3})"
        key = (u1, odd3)
        if key == (5, 3):
            F.fwd(4, l, (6, 0, 2))
        elif key == (1, 3):
            F.fwd(4, l, (0, 6, 4))
        elif key == (3, 5):
            F.put(3, 6 if v2 != 6 else 4)
            F.fwd(4, l, (2, 0, 6))
        elif key == (3, 1):
            F.put(3, 0 if v2 != 0 else 2)
            F.fwd(4, l, (4, 6, 0))
        else:
            return None
        return F.result()
    # u2 odd, u1 even
    ch.case += f"/claim:u2-odd({u2},{u1})"
    if u1 not in available_neighbor_labels(odd3):
        # several sub-cases re-label u3 so that f(u1) becomes a neighbour label
        relabel = [
            x
            for x in ODD
            if u1 in available_neighbor_labels(x) and x != u1 and abs(x - u2) >= 2 and x != v2
        ]
        if u2 == 3 or (u2 == 5 and u1 == 0 and v2 != 3) or (u2 == 1 and u1 == 6 and v2 != 3):
            x = ch.take(relabel)
            if x is None:
                return None
            odd3 = x
            F.put(3, x)
    if u1 in available_neighbor_labels(odd3):
        b = ch.pick(_nbrs(odd3), u1)
        a = ch.pick(EVEN, u1, b)
        c = ch.pick(EVEN, u1, a)
        if None in (a, c):
            return None
        F.fwd(4, l, (u1, a, c))
        return F.result()
    if u2 == 1 and u1 == 6:
        F.put(3, 4)
        F.fwd(4, l, (6, 2, 4))
    elif u2 == 1 and u1 == 4:
        if odd3 == 3:
            if v1 == 0:
                F.put(4, 5)
                F.fwd(5, l - 2, (2, 6, 4))
                F.put(l - 1, 2)
                F.put(l, 6)
            else:
                F.fwd(4, l, (6, 2, 0))
        elif odd3 == 5:
            a = ch.pick(EVEN, 6, 4, v1)
            F.put(4, 3)
            F.fwd(5, l - 2, (6, a, 4))
            F.put(l - 1, 6)
            F.put(l, a)
    elif u2 == 5 and u1 == 0:
        F.put(3, 2)
        F.fwd(4, l, (0, 4, 2) if v1 != 2 else (0, 6, 4))
    elif u2 == 5 and u1 == 2:
        if odd3 == 1:
            a = ch.pick(EVEN, 0, 2, v1)
            F.put(4, 3)
            F.fwd(5, l - 2, (0, a, 2))
            F.put(l - 1, 0)
            F.put(l, a)
        elif odd3 == 3:
            if v1 != 0:
                F.put(4, 1)
                F.fwd(5, l - 3, (4, 0, 2))
                F.put(l - 2, 4)
                F.put(l - 1, 0)
            else:
                F.fwd(4, l, (0, 4, 6))
    return F.result()


def _claim_ends(ch: _Choices, window: Window4, l: int) -> list[int] | None:
    v1, u1, u2, v2 = window
    odd3 = ch.pick([x for x in ODD if abs(x - u2) >= 2], u1, v2)
    even_l = ch.pick([x for x in EVEN if abs(x - u1) >= 2], u2, v1)
    if odd3 is None or even_l is None:
        return None
    return _odd_even_ends(ch, window, l, odd3, even_l)


def _zero_mod3(ch: _Choices, window: Window4, l: int) -> list[int] | None:
    v1, u1, u2, v2 = window
    if _odd(u1) and _odd(u2):
        if (u1, u2) not in {(1, 3), (1, 5), (3, 5)}:
            return _mirrored(_zero_mod3, ch, window, l)
        if _odd(v1) and _odd(v2):
            ch.case += "/zero:common"
            c = ch.take(sorted(available_neighbor_labels(u1) & available_neighbor_labels(u2)))
            if c is None:
                return None
            return _complete_from_ends(ch, window, l, c, c)
        side = ch.take([0, 1])
        if side == 0:
            return _claim_ends(ch, window, l)
        return _mirrored(_claim_ends, ch, window, l)
    if _odd(u1):
        return _mirrored(_claim_ends, ch, window, l)
    return _claim_ends(ch, window, l)


# ---------------------------------------------------------------------------
# at most one odd label in the window
# ---------------------------------------------------------------------------

# (f(u1), f(u2), f(v2)) -> ((f(u3), f(u4), f(u5)), pattern for u6..ul)
TABLE1: dict[tuple[int, int, int], tuple[tuple[int, int, int], tuple[int, int, int]]] = {
    (4, 6, 2): ((1, 5, 2), (4, 6, 2)),
    (0, 6, 2): ((1, 5, 2), (0, 6, 2)),
    (6, 0, 4): ((3, 1, 4), (6, 0, 4)),
    (2, 0, 4): ((3, 1, 4), (2, 0, 4)),
    (0, 2, 4): ((5, 1, 4), (0, 2, 4)),
    (0, 4, 2): ((1, 6, 2), (0, 4, 2)),
    (6, 4, 2): ((1, 5, 2), (6, 4, 2)),
    (0, 4, 6): ((1, 3, 6), (0, 4, 6)),
    (2, 4, 6): ((1, 3, 6), (2, 4, 6)),
    (4, 2, 0): ((5, 3, 0), (4, 2, 0)),
    (6, 2, 0): ((5, 3, 0), (4, 2, 0)),
}

_WIDE = {(6, 0), (0, 6), (2, 6), (6, 2), (0, 4), (4, 0), (4, 2), (2, 4)}


def table1(window: Window4, l: int) -> list[int] | None:
    """The tabulated case: l = 2 (mod 3) and f(v1) != f(v2)."""
    v1, u1, u2, v2 = window
    if l % 3 != 2 or v1 == v2:
        return None
    F = _Face(window, l)
    if (u1, u2, v2) == (6, 2, 4):
        if v1 != 1:
            F.fwd(3, l - 3, (0, 6, 2))
            F.put(l - 2, 0)
            F.put(l - 1, 3)
            F.put(l, 5)
        else:
            F.bwd(l, 6, (4, 2, 6))
            F.put(5, 4)
            F.put(4, 0)
            F.put(3, 5)
        return F.result()
    row = TABLE1.get((u1, u2, v2))
    if row is None:
        return None
    head, pat = row
    for i, x in enumerate(head):
        F.put(3 + i, x)
    F.fwd(6, l, pat)
    return F.result()


def _few_odd(ch: _Choices, window: Window4, l: int) -> list[int] | None:
    v1, u1, u2, v2 = window
    r = l % 3
    if _odd(u1) or _odd(u2):
        if r == 0:
            return _zero_mod3(ch, window, l)
        if _odd(u2):
            return _mirrored(_few_odd, ch, window, l)
        ch.case += f"/few:chord-odd-r{r}"
        F = _Face(window, l)
        if r == 2:
            a = ch.take([x for x in ODD if x != u1 and v2 in available_neighbor_labels(x)])
            b = ch.pick(EVEN, v2, u2)
            if a is None or b is None:
                return None
            F.put(l, a)
            F.put(l - 1, v2)
            F.put(3, b)
            F.fwd(4, l - 2, (v2, u2, b))
            return F.result()
        got = ch.take([(x, a) for x in ODD if x != u1 for a in _nbrs(x) if a not in (u2, v2)])
        if got is None:
            return None
        ul, a = got
        F.put(l, ul)
        F.put(l - 1, a)
        F.put(l - 4, a)
        F.put(l - 2, u2)
        F.put(l - 3, v2)
        F.bwd(l - 5, 3, (u2, v2, a))
        return F.result()

    if _odd(v2):
        # the odd pendant is moved to v1 for every residue, not only l = 0
        return _mirrored(_few_odd, ch, window, l)
    F = _Face(window, l)
    if r == 0:
        if _odd(v1):
            ch.case += "/few:even-chord-r0-odd-pendant"
            a = ch.pick(EVEN, u1, u2, v2)
            F.put(3, a)
            F.fwd(4, l, (u1, u2, a))
            return F.result()
        if u1 > u2:
            return _mirrored(_few_odd, ch, window, l)
        ch.case += f"/few:even-r0({u1},{u2})"
        if (u1, u2) in {(0, 6), (0, 2)}:
            x = ch.take(sorted(available_neighbor_labels(u1) & available_neighbor_labels(u2)))
            F.put(3, x)
            F.fwd(4, l, (u1, u2, v2))
        elif (u1, u2) in {(4, 6), (2, 6)}:
            x = v2 if v1 != v2 else ch.pick(EVEN, u1, u2, v1)
            F.put(3, 3)
            F.put(4, 1)
            F.put(5, 6)
            F.fwd(6, l - 1, (x, u1, 6))
            F.put(l, x)
        else:
            # the published indices leave ul unlabelled; the run is shifted by one
            heads = {
                (0, 4, 6): ((1, 3), (6, 2, 0)),
                (0, 4, 2): ((1, 5), (2, 6, 0)),
                (2, 4, 6): ((0, 3), (6, 0, 2)),
                (2, 4, 0): ((1, 5), (0, 6, 2)),
            }
            got = heads.get((u1, u2, v2))
            if got is None or v1 != v2:
                return None
            (h1, h2), pat = got
            F.put(3, h1)
            F.put(4, h2)
            F.fwd(5, l - 2, pat)
            F.put(l - 1, pat[0])
            F.put(l, pat[1])
        return F.result()
    if r == 1:
        ch.case += "/few:even-r1"
        if l == 4:
            return F.result() if F.bridge(ch, 3, 4) else None
        F.put(5, u1)
        if not F.bridge(ch, 3, 4):
            return None
        if (u1, u2) in _WIDE:
            x = v2 if v1 != v2 else ch.pick(EVEN, v2, u1, u2)
            F.fwd(6, l - 2, (u2, x, u1))
            F.put(l - 1, u2)
            F.put(l, x)
        else:
            x = v2 if v1 != v2 else ch.pick(EVEN, u1, u2, v2)
            F.bwd(l, 8, (x, u2, u1))
            F.put(7, x)
            F.put(6, u2)
        return F.result()
    # r == 2
    if (v2, u2) in {(6, 0), (6, 2), (0, 4), (0, 6)}:
        ch.case += "/few:even-r2-bridge"
        end = v2 if v1 != v2 else ch.pick(EVEN, u1, u2, v2)
        F.put(5, end)
        if not F.bridge(ch, 3, 4):
            return None
        F.fwd(6, l, (u1, u2, end))
        return F.result()
    if (v2, u2) in {(4, 6), (2, 0)}:
        ch.case += "/few:even-r2-bridge2"
        a = ch.pick(EVEN, v2, u1, u2)
        if v1 != v2:
            end, tail = v2, v2
        elif (v2, u2, u1) in {(4, 6, 2), (2, 0, 4)}:
            end, tail = a, a
        else:
            end, tail = v2, a
        F.put(5, end)
        if not F.bridge(ch, 3, 4):
            return None
        F.fwd(6, l, (u1, u2, tail))
        return F.result()
    if v1 != v2:
        ch.case += "/few:table"
        return table1(window, l)
    a = ch.pick(EVEN, u1, u2, v2)
    if (v2, u2) in {(2, 6), (4, 0)}:
        ch.case += "/few:even-r2-equal-pendants"
        F.put(5, a)
        if not F.bridge(ch, 3, 4):
            return None
        F.fwd(6, l, (u1, u2, a))
        return F.result()
    ch.case += "/few:even-r2-equal-pendants-back"
    F.put(l - 2, a)
    if not F.bridge(ch, l, l - 1):
        return None
    F.bwd(l - 3, 3, (u2, u1, a))
    return F.result()


# ---------------------------------------------------------------------------
# two or three odd labels
# ---------------------------------------------------------------------------


def _distinct_even_ends(ch: _Choices, window: Window4, l: int) -> list[int] | None:
    v1, u1, u2, v2 = window
    pairs = [
        (a, b)
        for a in EVEN
        if abs(a - u2) >= 2 and a not in (u1, v2)
        for b in EVEN
        if abs(b - u1) >= 2 and b not in (u2, v1, a)
    ]
    got = ch.take(pairs)
    if got is None:
        return None
    return _complete_from_ends(ch, window, l, *got)


def _many_odd(ch: _Choices, window: Window4, l: int) -> list[int] | None:
    v1, u1, u2, v2 = window
    odd = sum(_odd(x) for x in window)
    r = l % 3
    if odd >= 3 or (_odd(u1) and _odd(u2)):
        if r == 0:
            return _zero_mod3(ch, window, l)
        ch.case += "/many:distinct-ends"
        return _distinct_even_ends(ch, window, l)
    if _odd(u1) or _odd(u2):
        if r == 0:
            return _zero_mod3(ch, window, l)
        if _odd(u2):
            return _mirrored(_many_odd, ch, window, l)
        ch.case += "/many:one-chord-odd"
        a = ch.pick(_nbrs(u1), u2)
        b = ch.pick(EVEN, u2, v2, a)
        if a is None or b is None:
            return None
        return _complete_from_ends(ch, window, l, b, a)
    # u1, u2 even; v1, v2 odd
    F = _Face(window, l)
    if r == 0:
        if u2 > u1:
            return _mirrored(_many_odd, ch, window, l)
        ch.case += "/many:even-chord-r0"
        a = ch.pick(EVEN, u1, u2)
        F.fwd(3, l, (a, u1, u2))
        return F.result()
    if r == 1:
        if u2 > u1:
            return _mirrored(_many_odd, ch, window, l)
        ch.case += f"/many:even-chord-r1({u1},{u2})"
        if (u1, u2) in {(6, 4), (6, 2), (6, 0), (4, 0)}:
            if l == 4:
                return None
            c = ch.pick(EVEN, u1, u2)
            F.put(3, c)
            F.put(6, u2)
            if not F.bridge(ch, 4, 5):
                return None
            if l == 7:
                F.put(7, c)
            else:
                F.fwd(7, l - 1, (c, u1, u2))
                F.put(l, c)
        elif (u1, u2) == (2, 0):
            F.put(l, 6)
            F.put(l - 1, 3)
            F.fwd(3, l - 2, (4, 2, 0))
        elif (u1, u2) == (4, 2):
            F.put(l, 6)
            F.put(l - 1, 3)
            F.put(l - 2, 1)
            F.bwd(l - 3, 5, (4, 0, 2))
            F.put(4, 4)
            F.put(3, 0)
        return F.result()
    if u1 > u2:
        return _mirrored(_many_odd, ch, window, l)
    ch.case += f"/many:even-chord-r2({u1},{u2})"
    if (u1, u2) in {(0, 2), (0, 4)}:
        F.put(l - 2, 6)
        if not F.bridge(ch, l, l - 1):
            return None
        F.bwd(l - 3, 3, (u2, u1, 6))
    elif (u1, u2) == (0, 6):
        F.bwd(l, 6, (4, 6, 0))
        F.put(5, 4)
        F.put(4, 1)
        F.put(3, 3)
    elif (u1, u2) in {(2, 6), (4, 6)}:
        F.put(5, 0)
        if not F.bridge(ch, 3, 4):
            return None
        F.fwd(6, l, (u1, u2, 0))
    elif (u1, u2) == (2, 4):
        F.put(3, 0)
        F.put(4, 5)
        F.put(5, 1)
        F.fwd(6, l, (4, 0, 6))
    return F.result()


def _extend(ch: _Choices, window: Window4, l: int) -> list[int] | None:
    if l == 3:
        ch.case = "apex"
        return [ch.take(sorted(triangle_attach_options(window)))]
    odd = sum(_odd(x) for x in window)
    if odd <= 1:
        return _few_odd(ch, window, l)
    # four odd labels are not covered explicitly; the three-odd argument
    # only needs both chord labels odd
    return _many_odd(ch, window, l)


def face_conclusion(window: Window4, l: int, new: Sequence[int]) -> bool:
    """The stated outcome: a valid labeling of the face and its pendants,
    path-extendable along u2, u3, ..., ul, u1."""
    v1, u1, u2, v2 = window
    c = [u1, u2, *new]
    if len(c) != l or any(not 0 <= x <= 6 for x in c):
        return False
    for i in range(l):
        if abs(c[i] - c[(i + 1) % l]) < 2:
            return False
        if l > 3 and c[i] == c[(i + 2) % l]:
            return False
    if c[-1] == v1 or c[2 % l] == v2:
        return False
    return l == 3 or is_path_extendable([u2, *new, u1])


def extend_face_case(window: Window4, l: int) -> tuple[list[int] | None, str]:
    """Closed-form labels for ``u3..ul`` and the case that produced them."""
    if None in window or l < 3 or not window_extendable(window):
        return None, ""
    return _drive(_extend, lambda out: face_conclusion(window, l, out), window, l)


def extend_face(window: Window4, l: int) -> list[int] | None:
    return extend_face_case(window, l)[0]


# ---------------------------------------------------------------------------
# the face a branch enters
# ---------------------------------------------------------------------------


def _entry(ch: _Choices, prefix: Prefix, l: int) -> list[int] | None:
    p1, p2, p3 = prefix
    r = l % 3
    u: list[int | None] = [None] * (l + 1)

    def put(i: int, x: int | None) -> None:
        if 1 <= i <= l:
            u[i] = x

    def fwd(i: int, j: int, t) -> None:
        for k, x in zip(range(i, j + 1), _pattern(j - i + 1, t)):
            put(k, x)

    def bwd(i: int, j: int, t) -> None:
        for k, x in zip(range(i, j - 1, -1), _pattern(i - j + 1, t)):
            put(k, x)

    odd_ends = sum(_odd(x) for x in (p1, p3))
    if r == 0:
        if not _odd(p2):
            ch.case = "entry:r0-even"
            a = ch.pick(EVEN, p1, p2, p3)
            pair = ch.take([(b, c) for b in EVEN for c in EVEN if b != c and {b, c}.isdisjoint({a, p2})])
        elif odd_ends >= 1:
            ch.case = "entry:r0-odd"
            a = ch.pick(_nbrs(p2), p1, p3)
            pair = ch.take([(b, c) for b in EVEN for c in EVEN if b != c and {b, c}.isdisjoint({a, p2})])
        else:
            ch.case = "entry:r0-odd-even-ends"
            x = ch.pick(ODD, p2)
            a, b = ch.take([tuple(_nbrs(x)), tuple(_nbrs(x))[::-1]])
            c = ch.pick(EVEN, a, b)
            put(2, x)
            put(1, a)
            put(3, b)
            fwd(4, l, (a, c, b))
            pair = None
        if pair is not None:
            if a is None:
                return None
            b, c = pair
            put(1, b)
            put(2, a)
            put(3, c)
            fwd(4, l, (b, a, c))
    elif r == 1:
        if _odd(p2) and odd_ends <= 1:
            ch.case = "entry:r1-odd"
            x = ch.pick(ODD, p1, p2, p3)
            if x is None:
                return None
            a, b = ch.take([tuple(_nbrs(x)), tuple(_nbrs(x))[::-1]])
            c = ch.pick(EVEN, a, b)
            put(2, x)
            put(1, a)
            put(3, b)
            put(4, c)
            fwd(5, l, (a, b, c))
        elif _odd(p2):
            ch.case = "entry:r1-all-odd"
            fixed = {1: (6, 3, 0, 2, (4, 0, 2)), 3: (0, 5, 3, 6, (0, 2, 6)), 5: (0, 3, 1, 6, (0, 2, 6))}
            x2, x1, xl, xl1, pat = fixed[p2]
            put(2, x2)
            put(1, x1)
            put(l, xl)
            put(l - 1, xl1)
            bwd(l - 2, 3, pat)
        else:
            ch.case = "entry:r1-even"
            a = ch.pick(EVEN, p1, p2, p3)
            if a is None:
                return None
            d = 3 if a in (0, 6) else _nbrs(a)[0]
            b = ch.pick(_nbrs(d), a)
            c = ch.pick(EVEN, a, b, p2)
            if b is None or c is None:
                return None
            put(2, a)
            put(1, d)
            # the published run starts at u2, which already holds a; start at u3
            fwd(3, l - 2, (c, b, a))
            put(l - 1, c)
            put(l, b)
    else:
        if _odd(p1) and _odd(p2) and _odd(p3):
            ch.case = "entry:r2-all-odd"
            fixed = {
                1: (6, 3, 1, 4, 0, (6, 4, 0)),
                3: (6, 1, 5, 0, 2, (6, 0, 2)),
                5: (0, 3, 5, 2, 4, (0, 2, 4)),
            }
            x2, x1, xl, xl1, xl2, pat = fixed[p2]
            put(2, x2)
            put(1, x1)
            put(l, xl)
            put(l - 1, xl1)
            put(l - 2, xl2)
            bwd(l - 3, 3, pat)
        elif _odd(p2):
            x2 = ch.pick(ODD, p1, p2, p3)
            x1 = ch.pick(ODD, x2, p2) if x2 is not None else None
            if x2 is None or x1 is None:
                return None
            L1, L2 = set(_nbrs(x1)), set(_nbrs(x2))
            if len(L1 - L2) == 2:
                ch.case = "entry:r2-odd-disjoint"
                a, b = ch.take([(a, b) for a in sorted(L1) for b in sorted(L2) if a != b])
                d = min(L1 - {a})
            else:
                ch.case = "entry:r2-odd-overlap"
                # b must neighbour u2 for the run b c a to start at u3
                b = ch.take(sorted(L2 - L1))
                a = ch.take(sorted(L1 - {b}))
                if a is None or b is None:
                    return None
                d = min(L1 - {a})
            c = ch.pick(EVEN, a, b, d)
            if c is None:
                return None
            put(2, x2)
            put(1, x1)
            fwd(3, l, (b, c, a))
        else:
            ch.case = "entry:r2-even"
            a = ch.pick(EVEN, p1, p2, p3)
            if a is None:
                return None
            got = ch.take(
                [
                    (d1, d2)
                    for d1 in _nbrs(a)
                    for d2 in ODD
                    if abs(d2 - d1) >= 2 and a not in available_neighbor_labels(d2)
                ]
            )
            if got is None:
                return None
            d1, d2 = got
            b = ch.take(_nbrs(d2))
            c = ch.pick(EVEN, a, b, p2)
            if c is None:
                return None
            put(2, a)
            put(1, d1)
            put(l, d2)
            put(3, c)
            put(4, b)
            fwd(5, l - 1, (a, c, b))
    out = u[1:]
    if any(x is None for x in out):
        return None
    return out  # type: ignore[return-value]


def entry_conclusion(prefix: Prefix, l: int, c: Sequence[int]) -> bool:
    """Valid next to the prefix and type-2 cycle-extendable from u1."""
    p1, p2, p3 = prefix
    if len(c) != l or any(not 0 <= x <= 6 for x in c):
        return False
    for i in range(l):
        if abs(c[i] - c[(i + 1) % l]) < 2:
            return False
        if l > 3 and c[i] == c[(i + 2) % l]:
            return False
    if abs(c[1] - p2) < 2 or c[1] in (p1, p3) or p2 in (c[0], c[2 % l]):
        return False
    return is_cycle_extendable(list(c), 2, 0)


def entry_face_case(prefix: Prefix, l: int) -> tuple[list[int] | None, str]:
    if l < 3 or None in prefix:
        return None, ""
    return _drive(_entry, lambda out: entry_conclusion(prefix, l, out), prefix, l)


def entry_face(prefix: Prefix, l: int) -> list[int] | None:
    """Closed-form labels ``u1..ul`` of the face entered at ``u2`` from the
    labelled path ``v1 v2 v3`` (``v2`` adjacent to ``u2``)."""
    return entry_face_case(prefix, l)[0]
