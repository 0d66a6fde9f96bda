"""Colouring ordered graphs that exclude crossing-sequence obstructions.

Polygon visibility graphs, taken in boundary order, are the motivating
inputs.  The package recognises the obstructions, splits a graph into three
capped pieces, and colours it within a bound that depends only on the
clique number.
"""

from __future__ import annotations

from .capped_chroma import (
    ColouringResult,
    Decomposition,
    clique_number_hfree,
    colour_capped,
    colour_hfree,
    decompose_capped,
    degeneracy_colour,
    four_colour_tf_capped_holefree,
    triangle_crossed_complement,
    uncrossed_edges,
)
from .capped_partition import extend_precolouring, partition_three_capped, segment_families
from .crossing_reach import (
    CrossingReach,
    crossing_digraph,
    crossing_sequence_witness,
    has_crossing_sequence,
    is_valid_segment,
    reach_sets,
)
from .errors import (
    CoordinateRangeError,
    GraphError,
    GuardExceeded,
    InternalContradiction,
    NotCappedError,
    NotHFreeError,
    PreconditionError,
)
from .geometry_vis import (
    FIGURE1_POLYGON,
    Polygon,
    curve_visibility_graph,
    is_simple_ccw,
    orientation,
    random_simple_polygon,
    vertices_visible,
    visibility_graph,
)
from .obstructions import (
    find_capped_violation,
    find_crossing_pair,
    find_h_obstruction,
    find_ordered_hole,
    is_capped,
    is_h_free,
    is_ordered_hole_free,
)
from .oracles import (
    bf_capped,
    bf_chromatic,
    bf_clique,
    bf_crossing_sequence,
    bf_holes,
    verify_colouring,
)
from .ordered_graph import Edge, OrderedGraph, Segment, build, induced, parse_og, rotate, serialize_og

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
