from __future__ import annotations

import random
from itertools import permutations, product

import pytest
from conftest import path
from hypothesis import given, settings
from hypothesis import strategies as st

from outerlabel.errors import PartialLabelingError
from outerlabel.extendability import (
    EVEN,
    apply_pattern,
    available_neighbor_labels,
    is_cycle_extendable,
    is_path_extendable,
    square_attach_options,
    triangle_attach_options,
    window_extendable,
)
from outerlabel.labeling import Labeling, verify
from outerlabel.oracles import brute_cycle_extendable, brute_path_extendable

labels7 = st.integers(0, 6)

# -- labelings ----------------------------------------------------------------


@pytest.mark.parametrize(
    "n, labels, kinds",
    [(2, (0, 2), []), (2, (0, 1), ["adjacent"]), (3, (0, 3, 0), ["distance-2"])],
)
def test_verify_examples(n, labels, kinds):
    found = verify(path(n), labels)
    assert [str(v).split(" pair")[0] for v in found] == kinds


def test_verify_rejects_partial():
    with pytest.raises(PartialLabelingError):
        verify(path(3), [0, None, 4])


def test_labeling_json_round_trip():
    f = Labeling((0, 2, 4), 6)
    assert Labeling.from_json(f.to_json()) == f
    assert f.span == 4 and f.complement().labels == (6, 4, 2)
    with pytest.raises(ValueError):
        Labeling((0, 7), 6)


# -- local options --------------------------------------------------------------


def test_available_neighbor_labels():
    assert available_neighbor_labels(1) == {4, 6}
    assert available_neighbor_labels(2) == {5}
    assert available_neighbor_labels(0) | available_neighbor_labels(6) == {1, 3, 5}


def test_attach_options():
    assert triangle_attach_options((0, 2, 4, 0)) == {6}
    assert triangle_attach_options((0, 2, 4, 6)) == set()
    assert triangle_attach_options((6, 0, 2, 4)) == {5}
    assert square_attach_options((4, 1, 3, 0)) == set()
    assert {(5, 1), (6, 1)} <= square_attach_options((0, 2, 4, 0))
    assert (5, 1) in square_attach_options((0, 2, 4, 6))


def _brute_triangle(w):
    g_labels = [w[0], w[1], w[2], w[3]]
    out = set()
    for c in range(7):
        f = g_labels + [c]
        # path w0-w1-w2-w3 plus apex adjacent to w1, w2
        from outerlabel.graph import Graph

        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])
        if not verify(g, f):
            out.add(c)
    return out


@settings(max_examples=300)
@given(st.tuples(labels7, labels7, labels7, labels7))
def test_triangle_options_match_verifier(w):
    if verify(path(4), w):
        return
    assert triangle_attach_options(w) == _brute_triangle(w)


# -- path and cycle predicates ---------------------------------------------------


def test_path_examples():
    assert is_path_extendable([5, *apply_pattern(9, (0, 2, 4)), 1])
    assert not is_path_extendable([6, 4, 1, 3, 0, 5])
    assert not is_path_extendable([2, 5, 3, 6])


def test_cycle_examples():
    assert is_cycle_extendable([0, 2, 4, 0, 2, 4], 1)
    assert is_cycle_extendable([3, 6, 4, 0, 6, 4, 0], 1)
    assert not is_cycle_extendable([0, 2, 4, 6], 1)


def test_apply_pattern():
    assert apply_pattern(6, (0, 2, 4)) == [0, 2, 4, 0, 2, 4]
    assert apply_pattern(4, (6, 4, 0)) == [6, 4, 0, 6]
    with pytest.raises(ValueError, match="3 not in"):
        apply_pattern(3, (0, 2, 3))


@pytest.mark.parametrize("w", [(4, 1, 3, 0), (0, 2, 4, 6), (4, 1, 6, 3), (5, 1, 4, 6), (6, 1, 4, 2)])
def test_published_bad_windows(w):
    assert not window_extendable(w)
    assert not is_path_extendable(list(w))
    assert not brute_path_extendable(list(w))


@pytest.mark.parametrize("t", list(permutations(EVEN, 3)))
def test_type1_pattern_cycles(t):
    for k in (1, 2, 3, 4):
        assert is_cycle_extendable(apply_pattern(3 * k, t), 1)


def test_path_pattern_with_non_d_ends():
    # the ends avoid the even label missing from the pattern
    for t in permutations(EVEN, 3):
        d = next(x for x in EVEN if x not in t)
        body = apply_pattern(6, t)
        for u, v in product(range(7), repeat=2):
            s = [u, *body, v]
            if d in (u, v) or verify(path(len(s)), s):
                continue
            assert is_path_extendable(s), s


# -- oracle agreement --------------------------------------------------------------


def test_path_oracle_all_length4():
    for s in product(range(7), repeat=4):
        assert brute_path_extendable(s) == is_path_extendable(s)


def test_path_oracle_random_longer():
    rng = random.Random(11)
    for _ in range(3000):
        s = [rng.randrange(7) for _ in range(rng.randint(5, 8))]
        assert brute_path_extendable(s) == is_path_extendable(s), s


def _valid_cycle_labelings(l):
    for s in product(range(7), repeat=l):
        if all(abs(s[i] - s[(i + 1) % l]) >= 2 for i in range(l)) and all(
            s[i] != s[(i + 2) % l] for i in range(l)
        ):
            yield s


@pytest.mark.parametrize("l", [3, 4, 5])
@pytest.mark.parametrize("kind", [1, 2])
def test_cycle_oracle_exhaustive(l, kind):
    for s in _valid_cycle_labelings(l):
        assert brute_cycle_extendable(s, kind) == is_cycle_extendable(s, kind), s


def test_cycle_oracle_random_six():
    rng = random.Random(5)
    pool = list(_valid_cycle_labelings(6))
    for s in rng.sample(pool, 400):
        for kind in (1, 2):
            assert brute_cycle_extendable(s, kind) == is_cycle_extendable(s, kind), s


def test_literal_site_reading_differs():
    # allowing both edges at u_1 to carry attachments together is stricter
    pool = list(_valid_cycle_labelings(5))
    diff = sum(brute_cycle_extendable(s, 1, cyclic_gap=False) != brute_cycle_extendable(s, 1) for s in pool)
    assert diff > 0
