"""Closed-form face constructions against their stated conclusions.

The constructions are only a fast path; when one returns nothing or a
labeling that misses its conclusion, the labeler searches instead.  The
counts below are frozen so a regression in either direction shows up.
"""

from __future__ import annotations

from itertools import product

import pytest

from outerlabel.engine import extendable_windows
from outerlabel.extendability import triangle_attach_options
from outerlabel.closed_forms import (
    entry_conclusion,
    entry_face,
    entry_face_case,
    extend_face,
    extend_face_case,
    face_conclusion,
    table1,
)

FACE_LENGTHS = range(3, 21)


def _prefixes():
    for p in product(range(7), repeat=3):
        if p[0] != p[2] and abs(p[0] - p[1]) >= 2 and abs(p[1] - p[2]) >= 2:
            yield p


def test_face_fast_path_coverage():
    missing = 0
    for w, l in product(sorted(extendable_windows()), FACE_LENGTHS):
        out, case = extend_face_case(w, l)
        if out is None:
            missing += 1
            continue
        assert len(out) == l - 2
        assert face_conclusion(w, l, out), (w, l, case, out)
    assert missing == 470


def test_triangles_always_closed_form():
    for w in extendable_windows():
        out = extend_face(w, 3)
        assert out is not None and out[0] in triangle_attach_options(w)


def test_entry_fast_path_total():
    count = 0
    for p, l in product(list(_prefixes()), FACE_LENGTHS):
        out, case = entry_face_case(p, l)
        assert out is not None and entry_conclusion(p, l, out), (p, l, case)
        count += 1
    assert count == 1800


def test_entry_example():
    assert entry_face((1, 3, 5), 7) == [5, 0, 6, 2, 0, 6, 3]


def test_short_table_row_leaves_a_dead_window():
    # the tabulated triple for this window at l=5 puts (5, 3, 0, 6) on the
    # new boundary, which admits no triangle
    assert table1((1, 6, 2, 0), 5) == [5, 3, 0]
    assert triangle_attach_options((5, 3, 0, 6)) == frozenset()
    assert not face_conclusion((1, 6, 2, 0), 5, [5, 3, 0])


@pytest.mark.parametrize("w", [(0, 2, 4, 0), (6, 0, 2, 4), (1, 4, 0, 2)])
def test_conclusion_rejects_garbage(w):
    assert not face_conclusion(w, 4, [w[1], w[2]])
