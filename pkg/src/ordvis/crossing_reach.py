"""Crossing sequences, valid segments and left/right/strong reachability.

An edge ``ac`` crosses ``bd`` when ``a < b < c < d``.  A crossing sequence
from ``u`` to ``v`` (``u < v``) is a chain of edges, each crossing the next,
starting at an edge whose smaller end is ``u`` and ending at an edge whose
larger end is ``v``.  For ``v < u`` the same is asked in the rotation that
makes ``u`` the first vertex.

Deciding reachability does not need the crossing digraph.  Rotate so that
the source is vertex 0 and sweep left to right: an edge ``(b, d)`` with
``b > 0`` is reachable iff some already-reachable edge ``(a, c)`` with
``a < b`` has ``b < c < d``.  Keeping the upper ends of reachable edges in a
bitmask, the smallest one above ``b`` settles every edge leaving ``b`` at
once, so one source costs ``O(n)`` big-int operations.  The explicit digraph
is only built for witness extraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError
from .ordered_graph import Edge, OrderedGraph, Segment, reverse, rotate


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def span_mask(lo: int, hi: int) -> int:
    """Bitmask of the closed vertex range ``[lo, hi]`` (empty if ``lo > hi``)."""
    if lo > hi:
        return 0
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


def reach_from(g: OrderedGraph, u: int) -> int:
    """Bitmask of all ``v`` admitting a crossing sequence from ``u`` to ``v``."""
    n = g.n
    full = (1 << n) - 1
    low_u = (1 << u) - 1
    shift = n - u

    def rot(mask: int) -> int:
        return (mask >> u) | ((mask & low_u) << shift)

    nbr = g.nbr
    reach = rot(nbr[u])
    active = reach
    for b in range(1, n):
        active &= ~((1 << (b + 1)) - 1)
        if not active:
            break
        minc = (active & -active).bit_length() - 1
        w = b + u
        if w >= n:
            w -= n
        new = rot(nbr[w]) & ~((1 << (minc + 1)) - 1)
        if new:
            reach |= new
            active |= new
    # back to original labels
    return ((reach << u) & full) | (reach >> shift)


class CrossingReach:
    """All-pairs crossing-sequence reachability of one ordered graph.

    ``from_mask[u]`` holds every ``v`` reachable from ``u``; ``to_mask[v]``
    every ``u`` from which ``v`` is reachable.  Built once per graph and
    shared by the obstruction check and the partition recursion.
    """

    def __init__(self, g: OrderedGraph) -> None:
        self.g = g
        self.from_mask = [reach_from(g, u) for u in range(g.n)]
        to = [0] * g.n
        for u, mask in enumerate(self.from_mask):
            for v in bits(mask):
                to[v] |= 1 << u
        self.to_mask = to

    def has(self, u: int, v: int) -> bool:
        return bool(self.from_mask[u] >> v & 1)

    def is_valid(self, x: int, y: int) -> bool:
        return self.has(y, x)

    def left_mask(self, x: int, y: int) -> int:
        """``L[x, y)``: vertices of ``V[x, y)`` reachable from ``y``."""
        return self.from_mask[y] & span_mask(x, y - 1)

    def right_mask(self, x: int, y: int) -> int:
        """``R(x, y]``: vertices of ``V(x, y]`` from which ``x`` is reachable."""
        return self.to_mask[x] & span_mask(x + 1, y)

    def reach_sets(self, s: Segment) -> ReachSets:
        if not self.is_valid(s.x, s.y):
            raise GraphError(f"segment V[{s.x},{s.y}] is not valid")
        left = self.left_mask(s.x, s.y)
        right = self.right_mask(s.x, s.y)
        return ReachSets(frozenset(bits(left)), frozenset(bits(right)),
                         frozenset(bits(left & right)))


@dataclass(frozen=True)
class ReachSets:
    left: frozenset[int]
    right: frozenset[int]
    strong: frozenset[int]


@dataclass
class CrossingDigraph:
    """One node per edge, an arc ``e -> f`` whenever ``e`` crosses ``f``."""

    nodes: tuple[Edge, ...]
    arcs: dict[Edge, tuple[Edge, ...]] = field(default_factory=dict)

    def arc_list(self) -> list[tuple[Edge, Edge]]:
        return [(e, f) for e in self.nodes for f in self.arcs[e]]


def _successors(g: OrderedGraph, e: Edge) -> list[Edge]:
    a, c = e
    out = []
    for b in range(a + 1, c):
        for d in g.adj[b]:
            if d > c:
                out.append(Edge(b, d))
    out.sort()
    return out


def crossing_digraph(g: OrderedGraph) -> CrossingDigraph:
    return CrossingDigraph(g.edges, {e: tuple(_successors(g, e)) for e in g.edges})


def has_crossing_sequence(g: OrderedGraph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("crossing sequences need distinct end vertices")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise GraphError(f"vertex {w} outside 0..{g.n - 1}")
    return bool(reach_from(g, u) >> v & 1)


def crossing_sequence_witness(g: OrderedGraph, u: int, v: int) -> list[Edge] | None:
    """A minimal-hop crossing sequence from ``u`` to ``v`` in original labels.

    Breadth-first search in the crossing digraph of the rotation starting at
    ``u``; start edges, successors and final targets are all taken in
    ascending ``(lo, hi)`` order of that rotation, so the answer is
    deterministic.  Returns ``None`` when no sequence exists.
    """
    if u == v:
        raise GraphError("crossing sequences need distinct end vertices")
    rg, mapping = rotate(g, u)
    target = mapping[v]
    n = g.n
    starts = [Edge(0, d) for d in rg.adj[0]]
    parent: dict[Edge, Edge | None] = {e: None for e in starts}
    layer = starts
    while layer:
        hits = [e for e in layer if e.hi == target]
        if hits:
            path = [min(hits)]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            back = [((a + u) % n, (b + u) % n) for a, b in path]
            return [Edge(min(p), max(p)) for p in back]
        nxt = []
        for e in layer:
            for f in _successors(rg, e):
                if f not in parent:
                    parent[f] = e
                    nxt.append(f)
        layer = nxt
    return None


def reach_to(g: OrderedGraph, v: int) -> int:
    """Bitmask of all ``u`` admitting a crossing sequence from ``u`` to ``v``.

    Reversing the order turns a sequence from ``u`` to ``v`` into one from
    ``v`` to ``u``, so this is a forward sweep in the reversed graph.
    """
    top = g.n - 1
    rev = reverse(g)
    mask = reach_from(rev, top - v)
    return sum(1 << (top - w) for w in bits(mask))


def is_valid_segment(g: OrderedGraph, s: Segment) -> bool:
    return has_crossing_sequence(g, s.y, s.x)


def reach_sets(g: OrderedGraph, s: Segment) -> ReachSets:
    if not is_valid_segment(g, s):
        raise GraphError(f"segment V[{s.x},{s.y}] is not valid")
    left = reach_from(g, s.y) & span_mask(s.x, s.y - 1)
    right = reach_to(g, s.x) & span_mask(s.x + 1, s.y)
    return ReachSets(frozenset(bits(left)), frozenset(bits(right)),
                     frozenset(bits(left & right)))
