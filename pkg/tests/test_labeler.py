from __future__ import annotations

import pytest
from conftest import K4, K4_MINUS_E, cycle, path
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel import labeler
from outerlabel.embedding import outer_embedding
from outerlabel.errors import MaxDegreeExceeded, NoExtension, NotOuterplanar
from outerlabel.generators import enumerate_2conn_outerplanar, gen_gl, random_outerplanar
from outerlabel.graph import Graph
from outerlabel.labeler import MODES, Strategy, attach_block, label_graph, to_dot
from outerlabel.labeling import verify

ESCALATIONS = ("block_escalations", "exact_escalations", "no_extension")


def _clean(g, strategy=None):
    f = label_graph(g, strategy)
    assert not verify(g, f)
    assert f.is_total and max(f.labels, default=0) <= 6
    return f


# -- fixed examples-----------------------------------------------------------


def test_hexagon():
    f = _clean(cycle(6))
    assert f.labels == (0, 2, 4, 0, 2, 4) and f.span == 4


def test_k4_minus_e():
    # degree-3 vertices 0 and 2 take 0 and 2, the others 4 and 5
    assert _clean(K4_MINUS_E).labels == (0, 4, 2, 5)


@pytest.mark.parametrize("l", range(3, 16))
def test_gl_family(l):
    _clean(gen_gl(l).graph)


def test_degree_and_class_errors():
    with pytest.raises(NotOuterplanar):
        label_graph(K4)
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    with pytest.raises(MaxDegreeExceeded):
        label_graph(star)


def test_trees_and_small_pieces():
    assert _clean(Graph.from_edges(1, [])).labels == (0,)
    assert _clean(path(2)).labels == (0, 2)
    _clean(Graph.from_edges(0, []))
    _clean(Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)]))
    _clean(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (4, 5)]))


# -- every mode, every corpus graph ----------------------------------------------


@pytest.mark.parametrize("mode", MODES)
def test_corpus_without_escalation(mode):
    st_ = Strategy(mode)
    for n in range(3, 11):
        for g in enumerate_2conn_outerplanar(n):
            _clean(g, st_)
    assert all(st_.telemetry[k] == 0 for k in ESCALATIONS)


def test_search_mode_never_uses_closed_forms():
    st_ = Strategy("search")
    for g in enumerate_2conn_outerplanar(9):
        label_graph(g, st_)
    assert st_.telemetry["fast_path_used"] == 0 and st_.telemetry["face_searches"] > 0


def test_paper_mode_uses_closed_forms():
    st_ = Strategy("paper")
    label_graph(gen_gl(10).graph, st_)
    assert st_.telemetry["fast_path_used"] > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 250), st.integers(0, 2**32), st.sampled_from(MODES))
def test_random_graphs(n, seed, mode):
    st_ = Strategy(mode, strict=True)
    _clean(random_outerplanar(n, seed), st_)


def test_unknown_mode():
    with pytest.raises(ValueError):
        Strategy("greedy")


def test_deterministic():
    g = random_outerplanar(500, 3)
    assert label_graph(g) == label_graph(g)


# -- block entry ----------------------------------------------------------------


def test_attach_block_example():
    emb = outer_embedding(cycle(7))
    got = attach_block((1, 3, 5), emb, 1)
    labels = [got[v] for v in range(7)]
    assert labels == [5, 0, 6, 2, 0, 6, 3]
    assert not verify(cycle(7), labels)


def test_attach_block_rejects_chord_vertex():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    with pytest.raises(ValueError, match="chord"):
        attach_block((1, 3, 5), outer_embedding(g), 0)


# -- escalation ladder -------------------------------------------------------------


def test_block_escalation(monkeypatch, caplog):
    monkeypatch.setattr(labeler, "search_seed", lambda *a, **k: None)
    st_ = Strategy("search")
    _clean(cycle(8), st_)
    assert st_.telemetry["block_escalations"] == 1
    # the log carries a reproducer for the failing block
    assert "graph6 G" in caplog.text


def test_chord_only_fallback(monkeypatch):
    real = labeler.extend_over_face

    def flaky(window, l, **kw):
        if "required_edges" not in kw:
            raise NoExtension("forced")
        return real(window, l, **kw)

    monkeypatch.setattr(labeler, "extend_over_face", flaky)
    st_ = Strategy("search")
    _clean(gen_gl(5).graph, st_)
    assert st_.telemetry["chord_only_fallbacks"] > 0
    assert st_.telemetry["block_escalations"] == 0


def test_component_escalation(monkeypatch):
    monkeypatch.setattr(labeler, "fill_branch", lambda a1, a2, b, q: [b] * (q - 1))
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
    st_ = Strategy()
    _clean(g, st_)
    assert st_.telemetry["exact_escalations"] == 1


def test_strict_mode_raises(monkeypatch):
    monkeypatch.setattr(labeler, "search_seed", lambda *a, **k: None)
    with pytest.raises(NoExtension):
        label_graph(cycle(8), Strategy("search", strict=True))


# -- output ---------------------------------------------------------------------------


def test_dot_output():
    g = cycle(3)
    dot = to_dot(g, label_graph(g), name="C3")
    assert dot.startswith("graph C3 {") and '0 [label="0:0"];' in dot
    assert dot.count("--") == 3 and dot.endswith("}\n")
