from __future__ import annotations

import pytest
from hypothesis import given

from ordvis.errors import GuardExceeded
from ordvis.oracles import (
    bf_capped,
    bf_chromatic,
    bf_clique,
    bf_crossing_sequence,
    bf_holes,
    verify_colouring,
)
from ordvis.ordered_graph import OrderedGraph, build, complete_graph

from .conftest import ordered_graphs

C5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def test_clique_and_chromatic_examples():
    assert bf_clique(complete_graph(5)) == 5
    assert bf_clique(C5) == 2
    assert bf_chromatic(complete_graph(4)) == 4
    assert bf_chromatic(C5) == 3
    assert bf_chromatic(OrderedGraph(7)) == 1
    assert bf_clique(OrderedGraph(0)) == bf_chromatic(OrderedGraph(0)) == 0


def test_crossing_sequence_examples():
    assert bf_crossing_sequence(build(2, [(0, 1)]), 0, 1)
    g = build(6, [(0, 1), (4, 5)])
    assert not bf_crossing_sequence(g, 2, 3)


def test_pattern_examples():
    assert bf_capped(build(4, [(0, 2), (1, 3)])) == (0, 1, 2, 3)
    assert bf_holes(C5) == [0, 1, 2, 3, 4]
    assert verify_colouring(complete_graph(3), [0, 1, 2]) == (True, 3)
    assert verify_colouring(complete_graph(3), [0, 1, 1]) == (False, 2)
    assert verify_colouring(complete_graph(3), [0, 1])[0] is False


def test_guards_refuse():
    with pytest.raises(GuardExceeded):
        bf_chromatic(OrderedGraph(17))
    with pytest.raises(GuardExceeded):
        bf_holes(OrderedGraph(13))
    with pytest.raises(GuardExceeded):
        bf_crossing_sequence(complete_graph(7), 0, 1)
    assert bf_holes(OrderedGraph(13), max_n=13) is None


@given(ordered_graphs(max_n=8))
def test_clique_bounds_chromatic(g):
    assert bf_clique(g) <= bf_chromatic(g)
