from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel.errors import GraphFormatError
from outerlabel.graph import Graph, format_edge_list, from_graph6, graph6_codec, parse_edge_list, to_graph6


@st.composite
def graphs(draw, max_n: int = 70) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if not pairs:
        return Graph.from_edges(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=60))
    return Graph.from_edges(n, chosen)


# -- edge lists ---------------------------------------------------------------


def test_parse_single_edge():
    g = parse_edge_list("2 1\n0 1")
    assert g.n == 2 and g.edges == {(0, 1)}


def test_parse_rejects_out_of_range():
    with pytest.raises(GraphFormatError, match="range"):
        parse_edge_list("2 1\n0 2")


def test_parse_skips_comments():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # rim\n0 2\n")
    assert g.m == 3


@pytest.mark.parametrize("text", ["", "3", "3 2\n0 1", "2 1\n0 0", "2 2\n0 1\n1 0", "a b\n"])
def test_parse_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


# -- graph6 -------------------------------------------------------------------


@pytest.mark.parametrize(
    "code, edges",
    [("Bg", {(0, 1), (1, 2)}), ("Bw", {(0, 1), (0, 2), (1, 2)}), ("@", set())],
)
def test_graph6_examples(code, edges):
    g = graph6_codec(code)
    assert g.edges == edges
    assert graph6_codec(g) == code.encode()


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<Bw").m == 3


@pytest.mark.parametrize("bad", ["", "B", "Bw!", "~"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphFormatError):
        from_graph6(bad)


@settings(max_examples=150)
@given(graphs())
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    theirs = nx.to_graph6_bytes(h, header=False).strip()
    assert ours == theirs
    assert from_graph6(ours) == g


def test_second_neighbors_of_path():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert set(g.second_neighbors(0)) == {2}
    assert set(g.second_neighbors(1)) == {3}


def test_components_and_induced():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert sorted(map(sorted, g.components())) == [[0, 1], [2], [3, 4]]
    sub, back = g.induced([4, 3])
    assert sub.m == 1 and sorted(back) == [3, 4]
