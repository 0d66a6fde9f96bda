from __future__ import annotations

import json

from hypothesis import given
from hypothesis import strategies as st

from ordvis.geometry_vis import FIGURE1_POLYGON, visibility_graph
from ordvis.obstructions import (
    find_capped_violation,
    find_crossing_pair,
    find_h_obstruction,
    find_ordered_hole,
    is_capped,
    is_h_free,
    is_ordered_hole_free,
)
from ordvis.oracles import bf_capped, bf_crossing_pair, bf_crossing_sequence, bf_holes
from ordvis.ordered_graph import Edge, build, complete_graph, induced, rotate

from .conftest import is_crossing_sequence, ordered_graphs

C5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def test_h_witness_example():
    g = build(6, [(0, 2), (1, 3), (3, 5), (0, 4)])
    w = find_h_obstruction(g)
    assert (w.u, w.v) == (0, 3)
    assert w.seq_uv == (Edge(0, 2), Edge(1, 3))
    assert w.seq_vu == (Edge(3, 5), Edge(0, 4))
    assert bf_crossing_sequence(g, 0, 3) and bf_crossing_sequence(g, 3, 0)
    json.dumps(w.to_json())


def test_complete_graphs_are_h_free():
    for n in range(7):
        assert is_h_free(complete_graph(n))


def test_figure_graph_is_h_free_and_hole_free():
    g = visibility_graph(FIGURE1_POLYGON)
    assert find_h_obstruction(g) is None
    assert find_ordered_hole(g) is None


def test_hole_examples():
    assert find_ordered_hole(C5).cycle == (0, 1, 2, 3, 4)
    assert is_ordered_hole_free(complete_graph(4))


def test_capped_examples():
    assert find_capped_violation(build(4, [(0, 2), (1, 3)])).as_tuple() == (0, 1, 2, 3)
    assert is_capped(build(4, [(0, 2), (1, 3), (0, 3)]))
    assert is_capped(C5) and bf_capped(C5) is None


def test_crossing_pair_examples():
    assert find_crossing_pair(build(4, [(0, 2), (1, 3)])) == (Edge(0, 2), Edge(1, 3))
    assert find_crossing_pair(build(6, [(0, 5), (1, 4), (2, 3)])) is None
    assert find_crossing_pair(C5) is None and bf_crossing_pair(C5) is None


@given(ordered_graphs(max_n=10))
def test_capped_matches_quadruple_oracle(g):
    found = find_capped_violation(g)
    assert (found.as_tuple() if found else None) == bf_capped(g)


@given(ordered_graphs(max_n=10))
def test_holes_match_enumeration(g):
    hole = find_ordered_hole(g)
    assert (hole is None) == (bf_holes(g) is None)
    if hole is not None:
        cyc = list(hole.cycle)
        assert cyc == sorted(cyc) and len(cyc) >= 4
        sub, _ = induced(g, cyc)
        k = len(cyc)
        want = {Edge(i, i + 1) for i in range(k - 1)} | {Edge(0, k - 1)}
        assert set(sub.edges) == want


@given(ordered_graphs(max_n=9, max_m=12))
def test_h_witness_reverifies(g):
    w = find_h_obstruction(g)
    has_pair = any(not g.has_edge(u, v) and bf_crossing_sequence(g, u, v) and bf_crossing_sequence(g, v, u)
                   for u in range(g.n) for v in range(u + 1, g.n))
    assert (w is not None) == has_pair
    if w is not None:
        assert not g.has_edge(w.u, w.v)
        assert is_crossing_sequence(g, w.u, w.v, list(w.seq_uv))
        assert is_crossing_sequence(g, w.v, w.u, list(w.seq_vu))


@given(ordered_graphs(max_n=9))
def test_crossing_pair_matches_oracle(g):
    assert (find_crossing_pair(g) is None) == (bf_crossing_pair(g) is None)


@given(ordered_graphs(min_n=1, max_n=9))
def test_rotation_invariance(g):
    h, hole = is_h_free(g), is_ordered_hole_free(g)
    for r in range(g.n):
        rg, _ = rotate(g, r)
        assert is_h_free(rg) == h
        assert is_ordered_hole_free(rg) == hole


def test_capped_is_not_rotation_invariant():
    g = build(4, [(0, 2), (1, 3), (0, 3)])
    assert is_capped(g)
    assert not all(is_capped(rotate(g, r)[0]) for r in range(4))


@given(ordered_graphs(min_n=1, max_n=10), st.data())
def test_hereditary(g, data):
    subset = sorted(data.draw(st.sets(st.integers(0, g.n - 1))))
    sub, _ = induced(g, subset)
    if is_h_free(g):
        assert is_h_free(sub)
    if is_ordered_hole_free(g):
        assert is_ordered_hole_free(sub)
    if is_capped(g):
        assert is_capped(sub)
