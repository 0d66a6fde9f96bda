"""Recognisers, with witnesses, for H-freeness, ordered holes and cappedness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .crossing_reach import CrossingReach, bits, crossing_sequence_witness, span_mask
from .errors import InternalContradiction
from .ordered_graph import Edge, OrderedGraph


@dataclass(frozen=True)
class HWitness:
    """Non-adjacent ``u < v`` with crossing sequences both ways."""

    u: int
    v: int
    seq_uv: tuple[Edge, ...]
    seq_vu: tuple[Edge, ...]

    def to_json(self) -> dict[str, Any]:
        return {"kind": "H", "u": self.u, "v": self.v,
                "seq_uv": [list(e) for e in self.seq_uv],
                "seq_vu": [list(e) for e in self.seq_vu]}


@dataclass(frozen=True)
class HoleWitness:
    cycle: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {"kind": "ordered_hole", "cycle": list(self.cycle)}


@dataclass(frozen=True)
class CappedViolation:
    """``a<b<c<d`` with ``ac`` and ``bd`` edges but ``ad`` missing."""

    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict[str, Any]:
        return {"kind": "capped_violation", "quadruple": list(self.as_tuple())}


def find_h_obstruction(g: OrderedGraph, reach: CrossingReach | None = None) -> HWitness | None:
    """Lexicographically least non-adjacent pair with crossing sequences both ways."""
    if reach is None:
        reach = CrossingReach(g)
    full = (1 << g.n) - 1
    for u in range(g.n):
        # v > u, not adjacent, reachable from u, and u reachable from v
        cand = reach.from_mask[u] & reach.to_mask[u] & ~g.nbr[u] & full & ~((1 << (u + 1)) - 1)
        if cand:
            v = (cand & -cand).bit_length() - 1
            seq_uv = crossing_sequence_witness(g, u, v)
            seq_vu = crossing_sequence_witness(g, v, u)
            if seq_uv is None or seq_vu is None:
                raise InternalContradiction("reachability sweep and witness search disagree", (u, v))
            return HWitness(u, v, tuple(seq_uv), tuple(seq_vu))
    return None


def is_h_free(g: OrderedGraph) -> bool:
    return find_h_obstruction(g) is None


def _hole_through(g: OrderedGraph, u: int, v: int) -> list[int] | None:
    """Shortest increasing path ``u -> ... -> v`` avoiding common neighbours.

    The direct arc ``u -> v`` is not used.  A shortest increasing path has
    no chords (a chord would be a shortcut) and, with common neighbours of
    ``u`` and ``v`` removed, has at least three arcs; with the edge ``uv`` it
    is an ordered hole whose extreme vertices are ``u`` and ``v``.
    """
    nbr = g.nbr
    allowed = span_mask(u + 1, v) & ~(nbr[u] & nbr[v])
    parent: dict[int, int] = {}
    frontier = nbr[u] & allowed & ~(1 << v)
    for w in bits(frontier):
        parent[w] = u
    seen = frontier | (1 << u)
    while frontier:
        nxt = 0
        for w in bits(frontier):
            step = nbr[w] & allowed & ~seen & ~((1 << (w + 1)) - 1)
            for z in bits(step):
                parent[z] = w
            seen |= step
            nxt |= step
        if nxt >> v & 1:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            return path[::-1]
        frontier = nxt
    return None


def find_ordered_hole(g: OrderedGraph) -> HoleWitness | None:
    """An ordered hole, looked up edge by edge in ``(lo, hi)`` order."""
    for u, v in g.edges:
        if v - u < 3:
            continue
        path = _hole_through(g, u, v)
        if path is not None:
            return HoleWitness(tuple(path))
    return None


def is_ordered_hole_free(g: OrderedGraph) -> bool:
    return find_ordered_hole(g) is None


def find_capped_violation(g: OrderedGraph) -> CappedViolation | None:
    """Lexicographically least violating quadruple, or ``None`` if capped.

    For fixed ``a < b`` the candidates ``d`` are the neighbours of ``b`` that
    are not neighbours of ``a``; a violation exists iff some neighbour ``c``
    of ``a`` lies strictly between ``b`` and the largest such ``d``.
    """
    nbr = g.nbr
    for a in range(g.n):
        na = nbr[a]
        if not na:
            continue
        for b in range(a + 1, g.n):
            above_b = ~((1 << (b + 1)) - 1)
            d_cand = nbr[b] & ~na & above_b
            if not d_cand:
                continue
            top = d_cand.bit_length() - 1
            c_cand = na & above_b & ((1 << top) - 1)
            if c_cand:
                c = (c_cand & -c_cand).bit_length() - 1
                rest = d_cand & ~((1 << (c + 1)) - 1)
                d = (rest & -rest).bit_length() - 1
                return CappedViolation(a, b, c, d)
    return None


def is_capped(g: OrderedGraph) -> bool:
    return find_capped_violation(g) is None


def find_crossing_pair(g: OrderedGraph) -> tuple[Edge, Edge] | None:
    """Least crossing pair ``(ac, bd)``, ordered by ``ac`` then ``bd``."""
    nbr = g.nbr
    for a, c in g.edges:
        above_c = ~((1 << (c + 1)) - 1)
        for b in range(a + 1, c):
            far = nbr[b] & above_c
            if far:
                d = (far & -far).bit_length() - 1
                return Edge(a, c), Edge(b, d)
    return None


def is_outerplanar(g: OrderedGraph) -> bool:
    return find_crossing_pair(g) is None
