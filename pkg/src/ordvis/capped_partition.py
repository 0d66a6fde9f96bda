"""Partition an H-free ordered graph into three capped induced subgraphs.

The work happens in :func:`extend_precolouring`, a recursion over valid
segments ``V[x, y]``.  Its input colouring has coloured the ends and the
strongly reachable interior vertices ``S(x, y)`` (all with one colour), and
it colours the remaining interior so every colour class stays capped:

* if ``S(x, y)`` is empty, a chain ``x = v0 < v1 < ... < v_{k+1} = y`` of
  "furthest neighbour" jumps is coloured like ``x``, and each piece
  ``V[v_i, v_{i+1}]`` is handled recursively after its strongly reachable
  vertices get one of the two other colours, alternating with ``i``;
* otherwise the blocks between consecutive strongly reachable vertices are
  covered by two families of valid segments, one with no right-reachable
  interior vertex and one with no left-reachable interior vertex, and the
  segments are handled one at a time in ascending ``(a, b)`` order.

All reachability questions are answered from one :class:`CrossingReach`
table, since the graph itself never changes during the recursion.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Literal, Sequence

from .crossing_reach import CrossingReach, bits, span_mask
from .errors import InternalContradiction, NotHFreeError, PreconditionError
from .obstructions import find_capped_violation, find_h_obstruction
from .ordered_graph import OrderedGraph, Segment, induced

Check = Literal["off", "basic", "full"]
Reading = Literal["literal", "last"]

COLOURS = (0, 1, 2)


@dataclass(frozen=True)
class FamilySegment:
    a: int
    b: int
    family: Literal["L", "R"]


@dataclass(frozen=True)
class SegmentFamilies:
    L_family: tuple[Segment, ...]
    R_family: tuple[Segment, ...]


def _max_below(mask: int, v: int) -> int:
    m = mask & ((1 << v) - 1)
    return m.bit_length() - 1


def _min_above(mask: int, v: int) -> int:
    m = mask & ~((1 << (v + 1)) - 1)
    return (m & -m).bit_length() - 1


def _min_at_least(mask: int, v: int) -> int:
    return _min_above(mask, v - 1)


def _max_at_most(mask: int, v: int) -> int:
    return _max_below(mask, v + 1)


def _gaps(lo: int, hi: int, blocks: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Maximal sub-ranges of ``[lo, hi]`` internally disjoint from ``blocks``."""
    out = []
    cursor = lo
    for a, b in sorted(blocks):
        if a > cursor:
            out.append((cursor, a))
        cursor = max(cursor, b)
    if hi > cursor:
        out.append((cursor, hi))
    return out


def _standard_block(lo: int, hi: int, left: int, right: int) -> list[FamilySegment]:
    """Cover ``V[lo, hi]`` (lower end side of the host) by valid segments.

    Right-reachable interior vertices are wrapped in ``R`` segments between
    the nearest left-reachable vertices; the rest is covered by ``L``
    segments, each stretched to the next right-reachable vertex.
    """
    blk_left = left & span_mask(lo, hi)
    blk_right = right & span_mask(lo, hi)
    r_segs = sorted({(_max_below(blk_left, r), _min_above(blk_left, r))
                     for r in bits(right & span_mask(lo + 1, hi - 1))})
    out = [FamilySegment(a, b, "R") for a, b in r_segs]
    for g1, g2 in _gaps(lo, hi, r_segs):
        out.append(FamilySegment(g1, _min_at_least(blk_right, g2), "L"))
    return out


def _last_block(lo: int, hi: int, left: int, right: int) -> list[FamilySegment]:
    """Mirror image of :func:`_standard_block` for the block ending at ``y``."""
    blk_left = left & span_mask(lo, hi)
    blk_right = right & span_mask(lo, hi)
    l_segs = sorted({(_max_below(blk_right, v), _min_above(blk_right, v))
                     for v in bits(left & span_mask(lo + 1, hi - 1))})
    out = [FamilySegment(a, b, "L") for a, b in l_segs]
    for g1, g2 in _gaps(lo, hi, l_segs):
        out.append(FamilySegment(_max_at_most(blk_left, g1), g2, "R"))
    return out


def family_segments(reach: CrossingReach, x: int, y: int) -> list[FamilySegment]:
    """The ``L``/``R`` segment families of a valid segment with ``S(x, y)`` non-empty."""
    left = reach.left_mask(x, y)
    right = reach.right_mask(x, y)
    strong = bits(left & right)
    if not strong:
        raise PreconditionError(f"V[{x},{y}] has no strongly reachable vertex")
    s = [x, *strong, y]
    segs: list[FamilySegment] = []
    for i in range(len(s) - 2):
        segs.extend(_standard_block(s[i], s[i + 1], left, right))
    segs.extend(_last_block(s[-2], s[-1], left, right))
    return sorted(set(segs), key=lambda f: (f.a, f.b, f.family))


def segment_families(g: OrderedGraph, s: Segment) -> SegmentFamilies:
    segs = family_segments(CrossingReach(g), s.x, s.y)
    return SegmentFamilies(
        tuple(Segment(f.a, f.b) for f in segs if f.family == "L"),
        tuple(Segment(f.a, f.b) for f in segs if f.family == "R"),
    )


class _Extender:
    def __init__(self, g: OrderedGraph, reach: CrossingReach, colour: list[int | None],
                 check: Check, reading: Reading) -> None:
        self.g = g
        self.reach = reach
        self.colour = colour
        self.check = check
        self.reading = reading
        self.calls = 0

    # -- precolouring conditions ---------------------------------------------

    def verify_precolouring(self, x: int, y: int, left: int, right: int) -> None:
        colour = self.colour
        strong = left & right
        if colour[x] is None or colour[y] is None:
            raise PreconditionError(f"V[{x},{y}]: an end is uncoloured", (x, y))
        coloured_interior = [v for v in range(x + 1, y) if colour[v] is not None]
        if coloured_interior != bits(strong):
            raise PreconditionError(
                f"V[{x},{y}]: coloured interior {coloured_interior} is not S = {bits(strong)}",
                (x, y))
        if strong:
            cs = {colour[v] for v in bits(strong)}
            if len(cs) != 1:
                raise PreconditionError(f"V[{x},{y}]: S(x,y) is not monochromatic", (x, y))
            (c_s,) = cs
            outside = ~span_mask(x, y) & ((1 << self.g.n) - 1)
            for v in range(x + 1, y):
                for u in bits(self.g.nbr[v] & outside):
                    if colour[u] == c_s:
                        raise PreconditionError(
                            f"V[{x},{y}]: exterior neighbour {u} of {v} has the S colour",
                            (x, y, u, v))
        if self.check == "full":
            self._verify_classes_capped((x, y))
            core = sorted([x, y, *bits(strong)])
            sub, _ = induced(self.g, core)
            if find_capped_violation(sub) is not None:
                raise InternalContradiction(f"S({x},{y}) with its ends is not capped", (x, y))

    def _verify_classes_capped(self, where: object) -> None:
        for c in COLOURS:
            members = [v for v, cv in enumerate(self.colour) if cv == c]
            sub, _ = induced(self.g, members)
            bad = find_capped_violation(sub)
            if bad is not None:
                quad = tuple(members[i] for i in bad.as_tuple())
                raise InternalContradiction(f"colour class {c} not capped at {where}", quad)

    # -- recursion -------------------------------------------------------------

    def extend(self, x: int, y: int) -> None:
        self.calls += 1
        reach = self.reach
        if not reach.is_valid(x, y):
            raise InternalContradiction(f"recursed into invalid segment V[{x},{y}]", (x, y))
        left = reach.left_mask(x, y)
        right = reach.right_mask(x, y)
        if self.check != "off":
            self.verify_precolouring(x, y, left, right)
        if all(self.colour[v] is not None for v in range(x + 1, y)):
            return
        if left & right:
            self._case_strong(x, y, left, right)
        else:
            self._case_empty(x, y)

    def _case_empty(self, x: int, y: int) -> None:
        nbr = self.g.nbr
        colour = self.colour

        def nbr_t(w: int) -> int:
            # temporary edges join consecutive vertices of V[x, y]
            m = nbr[w]
            if w > x:
                m |= 1 << (w - 1)
            if w < y:
                m |= 1 << (w + 1)
            return m

        chain = [x, (nbr_t(x) & span_mask(x, y - 1)).bit_length() - 1]
        while chain[-1] != y:
            prev, cur = chain[-2], chain[-1]
            reach_out = 0
            for w in range(prev + 1, cur + 1):
                reach_out |= nbr_t(w)
            chain.append((reach_out & span_mask(cur + 1, y)).bit_length() - 1)

        base = colour[x]
        for v in chain[1:-1]:
            colour[v] = base
        blue, green = (c for c in COLOURS if c != base)

        pieces = []
        for i in range(len(chain) - 1):
            a, b = chain[i], chain[i + 1]
            if b - a < 2:
                continue
            if not self.reach.is_valid(a, b):
                raise InternalContradiction(f"chain piece V[{a},{b}] is not valid", (a, b))
            strong = self.reach.left_mask(a, b) & self.reach.right_mask(a, b)
            pieces.append((i, a, b, strong))

        k = len(chain) - 2
        probe = k - 1 if self.reading == "literal" else k
        for i, _, _, strong in pieces:
            if i == probe and strong and (blue if i % 2 else green) == colour[y]:
                blue, green = green, blue
                break

        for i, _, _, strong in pieces:
            c = blue if i % 2 else green
            for v in bits(strong):
                colour[v] = c
        for _, a, b, _ in pieces:
            self.extend(a, b)

    def _case_strong(self, x: int, y: int, left: int, right: int) -> None:
        colour = self.colour
        strong = left & right
        c_s = colour[(strong & -strong).bit_length() - 1]
        col_l, col_r = (c for c in COLOURS if c != c_s)
        segs = family_segments(self.reach, x, y)
        for idx, seg in enumerate(segs):
            a, b = seg.a, seg.b
            for end in (a, b):
                if colour[end] is None:
                    in_l, in_r = left >> end & 1, right >> end & 1
                    if in_l == in_r:
                        raise InternalContradiction(
                            f"segment end {end} of V[{a},{b}] is in {'both' if in_l else 'neither'}"
                            " of L and R", (x, y, a, b))
                    colour[end] = col_l if in_l else col_r
            if b - a > 1:
                if not self.reach.is_valid(a, b):
                    raise InternalContradiction(f"family segment V[{a},{b}] is not valid", (a, b))
                sub_strong = self.reach.left_mask(a, b) & self.reach.right_mask(a, b)
                fam_colour = col_l if seg.family == "L" else col_r
                for v in bits(sub_strong):
                    if colour[v] is not None:
                        raise InternalContradiction(
                            f"interior vertex {v} of V[{a},{b}] coloured before its turn", (a, b, v))
                    colour[v] = fam_colour
                self.extend(a, b)
            pending = 0
            for later in segs[idx + 1:]:
                pending |= span_mask(later.a + 1, later.b - 1)
            for v in bits(pending):
                colour[v] = None
        missing = [v for v in range(x + 1, y) if colour[v] is None]
        if missing:
            raise InternalContradiction(f"V[{x},{y}] left interior vertices {missing} uncoloured")


def _recursion_room(n: int) -> None:
    need = 4 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def extend_precolouring(g: OrderedGraph, s: Segment, phi: Sequence[int | None], *,
                        check: Check = "basic", reading: Reading = "literal") -> list[int | None]:
    """Colour the interior of the valid segment ``s`` keeping every class capped.

    ``phi`` must be a precolouring for ``s``: it colours exactly the ends and
    the strongly reachable interior vertices, the latter all alike, and no
    exterior neighbour of an interior vertex carries that colour.  The graph
    must be H-free (not re-checked here).  Vertices outside ``s`` keep their
    colours.
    """
    if len(phi) != g.n:
        raise PreconditionError("colouring length differs from the vertex count")
    reach = CrossingReach(g)
    if not reach.is_valid(s.x, s.y):
        raise PreconditionError(f"V[{s.x},{s.y}] is not a valid segment")
    colour = list(phi)
    _recursion_room(g.n)
    ext = _Extender(g, reach, colour, check if check != "off" else "basic", reading)
    ext.verify_precolouring(s.x, s.y, reach.left_mask(s.x, s.y), reach.right_mask(s.x, s.y))
    ext.check = check
    ext.extend(s.x, s.y)
    return colour


def augmented(g: OrderedGraph) -> OrderedGraph:
    """``g`` with a new first and last vertex joined by an edge."""
    n = g.n
    edges = [(u + 1, v + 1) for u, v in g.edges]
    edges.append((0, n + 1))
    return OrderedGraph(n + 2, edges)


def capped_three_colouring(g: OrderedGraph, *, check: Check = "basic",
                           reading: Reading = "literal", require_h_free: bool = True) -> list[int]:
    """A colouring with colours 0, 1, 2 whose classes induce capped graphs."""
    if require_h_free:
        wit = find_h_obstruction(g)
        if wit is not None:
            raise NotHFreeError("input is not H-free", wit)
    if g.n == 0:
        return []
    aug = augmented(g)
    colour: list[int | None] = [None] * aug.n
    colour[0] = colour[-1] = 0
    _recursion_room(aug.n)
    ext = _Extender(aug, CrossingReach(aug), colour, check, reading)
    ext.extend(0, aug.n - 1)
    out = colour[1:-1]
    if any(c is None for c in out):
        raise InternalContradiction("partition left vertices uncoloured")
    result = [int(c) for c in out]  # type: ignore[arg-type]
    for part in parts_from_colouring(result):
        sub, _ = induced(g, part)
        bad = find_capped_violation(sub)
        if bad is not None:
            raise InternalContradiction("a part of the partition is not capped",
                                        tuple(part[i] for i in bad.as_tuple()))
    return result


def parts_from_colouring(colours: Sequence[int]) -> list[list[int]]:
    return [[v for v, c in enumerate(colours) if c == k] for k in COLOURS]


def partition_three_capped(g: OrderedGraph, *, check: Check = "basic",
                           reading: Reading = "literal") -> list[list[int]]:
    """Three disjoint vertex lists covering ``V(g)``, each inducing a capped graph."""
    return parts_from_colouring(capped_three_colouring(g, check=check, reading=reading))
