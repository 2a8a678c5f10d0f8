from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel.embedding import outer_embedding
from outerlabel.blocks import block_decomposition
from outerlabel.generators import (
    chord_sets,
    dihedral_canonical,
    enumerate_2conn_outerplanar,
    gen_gl,
    random_outerplanar,
)
from outerlabel.graph import format_edge_list
from outerlabel.oracles import brute_chord_sets

# dihedral classes of Δ≤3 polygon dissections, n = 3..14
CLASS_COUNTS = [1, 2, 2, 4, 5, 10, 15, 30, 51, 108, 205, 443]


@pytest.mark.parametrize("l, n, m", [(3, 8, 11), (4, 10, 14), (9, 20, 29)])
def test_gl_sizes(l, n, m):
    g = gen_gl(l).graph
    assert (g.n, g.m, g.max_degree()) == (n, m, 3)


def test_gl_names_and_rejects_small():
    inst = gen_gl(4)
    assert inst.names[0] == "u" and inst.names[5] == "v" and inst.names[9] == "y4"
    assert {(0, 1), (0, 6), (4, 5), (5, 9)} <= inst.graph.edges
    with pytest.raises(ValueError):
        gen_gl(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_chord_sets_match_brute_force(n):
    assert {frozenset(s) for s in chord_sets(n)} == brute_chord_sets(n)


def test_class_counts():
    got = [sum(1 for _ in enumerate_2conn_outerplanar(n)) for n in range(3, 15)]
    assert got == CLASS_COUNTS


def test_small_classes():
    assert [sorted(g.edges) for g in enumerate_2conn_outerplanar(3)] == [[(0, 1), (0, 2), (1, 2)]]
    four = list(enumerate_2conn_outerplanar(4))
    assert sorted(g.m for g in four) == [4, 5]
    assert sorted(g.m for g in enumerate_2conn_outerplanar(5)) == [5, 6]


@pytest.mark.parametrize("n", range(3, 11))
def test_classes_are_distinct_and_valid(n):
    seen = set()
    for g in enumerate_2conn_outerplanar(n):
        chords = tuple(sorted(e for e in g.edges if (e[1] - e[0]) % n not in (1, n - 1)))
        key = dihedral_canonical(n, chords)
        assert key not in seen
        seen.add(key)
        assert g.max_degree() <= 3
        outer_embedding(g)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_2conn_outerplanar(2))
    with pytest.raises(ValueError):
        list(enumerate_2conn_outerplanar(15))


def test_random_is_deterministic():
    a = format_edge_list(random_outerplanar(300, 9))
    assert a == format_edge_list(random_outerplanar(300, 9))
    assert a != format_edge_list(random_outerplanar(300, 10))
    assert random_outerplanar(1, 0).n == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 400), st.integers(0, 2**32))
def test_random_outputs_are_in_class(n, seed):
    g = random_outerplanar(n, seed)
    assert g.n == n and g.max_degree() <= 3
    assert len(g.components()) == 1
    d = block_decomposition(g)
    for b in d.blocks:
        sub, _ = g.induced(b)
        outer_embedding(sub)
