from __future__ import annotations

import networkx as nx
import pytest
from conftest import K4, K23, K4_MINUS_E, cycle
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel.blocks import biconnected_edge_components, block_decomposition
from outerlabel.embedding import check_embedding, faces_and_weak_dual, outer_embedding
from outerlabel.errors import NotOuterplanar
from outerlabel.generators import enumerate_2conn_outerplanar, gen_gl, polygon_graph, random_outerplanar
from outerlabel.graph import Graph


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# -- blocks -------------------------------------------------------------------


def test_cycle_is_one_block():
    d = block_decomposition(cycle(5))
    assert d.blocks == ((0, 1, 2, 3, 4),)
    assert not d.cut_vertices and not d.branches


def test_two_triangles_and_a_path():
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]
    g = Graph.from_edges(8, edges)
    d = block_decomposition(g)
    assert len(d.blocks) == 2
    assert d.cut_vertices == {2, 5}
    assert d.branches == ((2, 3, 4, 5),)


def test_gl_is_one_block(g4):
    assert len(block_decomposition(g4).blocks) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 120), st.integers(0, 10**6))
def test_blocks_match_networkx(n, seed):
    g = random_outerplanar(n, seed)
    ours = sorted(sorted(map(tuple, c)) for c in biconnected_edge_components(g))
    theirs = sorted(sorted(tuple(sorted(e)) for e in c) for c in nx.biconnected_component_edges(_nx(g)))
    assert ours == theirs
    d = block_decomposition(g)
    # cut vertices here are the articulation points inside 2-connected blocks
    in_blocks = {v for b in d.blocks for v in b}
    assert d.cut_vertices == set(nx.articulation_points(_nx(g))) & in_blocks
    # every bridge lies on exactly one branch
    bridges = {tuple(sorted(e)) for e in nx.bridges(_nx(g))}
    on_branches = [tuple(sorted(p[i : i + 2])) for p in d.branches for i in range(len(p) - 1)]
    assert sorted(on_branches) == sorted(bridges)


# -- embedding ----------------------------------------------------------------


def test_cycle_embedding():
    emb = outer_embedding(cycle(5))
    assert sorted(emb.outer_cycle) == list(range(5))
    assert not emb.chords and len(emb.faces) == 1


def test_gl_embedding(g4):
    emb = outer_embedding(g4)
    assert emb.chords == {(i, 5 + i) for i in range(1, 5)}
    assert len(emb.faces) == 5
    # the weak dual is a path: two leaves and three inner nodes
    degrees = sorted(len(a) for a in emb.dual_adjacency())
    assert degrees == [1, 1, 2, 2, 2]
    assert set(emb.outer_cycle) == set(range(10))


def test_hexagon_with_chord():
    faces, dual = faces_and_weak_dual((0, 1, 2, 3, 4, 5), frozenset({(0, 2)}))
    assert sorted(sorted(f.boundary) for f in faces) == [[0, 1, 2], [0, 2, 3, 4, 5]]
    assert len(dual) == 1


@pytest.mark.parametrize("g", [K4, K23], ids=["K4", "K2,3"])
def test_not_outerplanar(g):
    with pytest.raises(NotOuterplanar):
        outer_embedding(g)


def test_k4_minus_e_is_outerplanar():
    emb = outer_embedding(K4_MINUS_E)
    assert emb.chords == {(0, 2)}


@pytest.mark.parametrize("n", range(3, 11))
def test_corpus_embeddings_are_consistent(n):
    for g in enumerate_2conn_outerplanar(n):
        emb = outer_embedding(g)
        check_embedding(g, emb)
        assert len(emb.faces) == g.m - g.n + 1
        assert len(emb.weak_dual) == len(emb.faces) - 1
        assert sum(len(f) for f in emb.faces) == g.n + 2 * len(emb.chords)


def test_crossing_chords_rejected():
    g = polygon_graph(6, [(0, 3), (1, 4)])
    with pytest.raises(NotOuterplanar):
        outer_embedding(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10**6))
def test_planarity_agrees_with_networkx(n, seed):
    # outerplanar iff planar after adding an apex joined to every vertex
    import random

    rng = random.Random(seed)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    g = polygon_graph(n, [p for p in pairs[: rng.randint(0, n)] if p[1] - p[0] not in (1, n - 1)])
    h = _nx(g)
    h.add_edges_from((n, v) for v in range(n))
    expected = nx.check_planarity(h)[0]
    try:
        outer_embedding(g)
        got = True
    except NotOuterplanar:
        got = False
    assert got == expected
