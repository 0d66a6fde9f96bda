from __future__ import annotations

import warnings

import pytest
from hypothesis import given

from ordvis.errors import GraphError
from ordvis.ordered_graph import (
    DuplicateEdgeWarning,
    Edge,
    OrderedGraph,
    Segment,
    build,
    complete_graph,
    crosses,
    induced,
    parse_og,
    reverse,
    rotate,
    serialize_og,
)

from .conftest import ordered_graphs


def test_build_normalises_and_sorts():
    g = build(4, [(2, 0), (1, 3), (0, 2)])
    assert g.edges == (Edge(0, 2), Edge(1, 3))
    assert g.has_edge(2, 0) and not g.has_edge(0, 1)
    assert g.adj[0] == (2,)


@pytest.mark.parametrize("pairs", [[(1, 1)], [(0, 4)], [(-1, 2)]])
def test_build_rejects_bad_edges(pairs):
    with pytest.raises(GraphError):
        build(4, pairs)


def test_crossing_is_directed():
    g = build(4, [(0, 2), (1, 3)])
    assert crosses(g, (0, 2), (1, 3))
    assert not crosses(g, (1, 3), (0, 2))
    with pytest.raises(GraphError):
        crosses(g, (0, 1), (1, 3))


def test_nested_edges_do_not_cross():
    g = build(4, [(0, 3), (1, 2)])
    assert not crosses(g, (0, 3), (1, 2))
    assert not crosses(g, (1, 2), (0, 3))


def test_rotate_relabels():
    g = build(4, [(0, 2), (1, 3)])
    r, mapping = rotate(g, 1)
    assert mapping == [3, 0, 1, 2]
    assert set(r.edges) == {Edge(0, 2), Edge(1, 3)}
    with pytest.raises(GraphError):
        rotate(g, 4)


def test_segment_needs_order():
    assert list(Segment(2, 5).interior()) == [3, 4]
    assert not Segment(2, 3).has_interior()
    with pytest.raises(GraphError):
        Segment(3, 3)


def test_induced_requires_increasing():
    g = complete_graph(4)
    sub, mapping = induced(g, [0, 2, 3])
    assert sub == complete_graph(3)
    assert mapping == {0: 0, 2: 1, 3: 2}
    with pytest.raises(GraphError):
        induced(g, [2, 0])


def test_parse_og_comments_and_duplicates():
    text = "# demo\n3 3\n0 1\n\n1 2\n2 1\n"
    with pytest.warns(DuplicateEdgeWarning):
        g = parse_og(text)
    assert g.edges == (Edge(0, 1), Edge(1, 2))


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 3\n", "3 1\n1 1\n"])
def test_parse_og_rejects_malformed(text):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with pytest.raises(GraphError):
            parse_og(text)


@given(ordered_graphs())
def test_serialise_round_trip(g):
    assert parse_og(serialize_og(g)) == g


@given(ordered_graphs(min_n=1))
def test_full_rotation_and_double_reverse_are_identity(g):
    if g.n > 1:
        assert rotate(rotate(g, 1)[0], g.n - 1)[0] == g
    assert reverse(reverse(g)) == g


def test_graph_equality_and_hash():
    a = OrderedGraph(3, [(0, 1)])
    b = OrderedGraph(3, [(1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != OrderedGraph(4, [(0, 1)])
