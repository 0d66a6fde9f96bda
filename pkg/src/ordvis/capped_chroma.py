"""Clique number and bounded colourings for capped and H-free ordered graphs.

Capped graphs are peeled into triangle-free capped layers: the edges whose
upper end sees no triangle entirely at or below their lower end form one
layer, and what remains has clique number one smaller.  Each layer is
4-coloured by breadth-first levels (after removing its uncrossed edges when
the graph may contain ordered holes), the removed edges are coloured
greedily, and a vertex's final colour is the tuple of its layer colours.
H-free graphs go through the three-way capped partition first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .capped_partition import capped_three_colouring, parts_from_colouring
from .crossing_reach import bits
from .errors import InternalContradiction, NotCappedError, NotHFreeError, PreconditionError
from .obstructions import find_capped_violation, find_h_obstruction, find_ordered_hole
from .ordered_graph import Edge, OrderedGraph, induced, subgraph_on_edges


@dataclass
class Decomposition:
    """Edge-disjoint triangle-free capped layers covering ``E(g)``."""

    parts: list[OrderedGraph]
    omega: int


@dataclass
class ColouringResult:
    colours: list[int]
    num_colours: int
    omega: int
    bound: int
    class_tag: str
    palette_size: int = 0
    proper: bool = True
    parts: list[list[int]] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"colours": self.colours, "num_colours": self.num_colours, "omega": self.omega,
               "bound": self.bound, "class": self.class_tag, "proper": self.proper}
        if self.parts:
            out["parts"] = self.parts
        return out


def _has_triangle(g: OrderedGraph) -> bool:
    nbr = g.nbr
    return any(nbr[u] & nbr[v] for u, v in g.edges)


def _is_proper(g: OrderedGraph, colours: Sequence[int]) -> bool:
    return all(colours[u] != colours[v] for u, v in g.edges)


def _dense(values: Sequence[object]) -> list[int]:
    code: dict[object, int] = {}
    return [code.setdefault(v, len(code)) for v in values]


def triangle_crossed_complement(g: OrderedGraph) -> set[Edge]:
    """Edges ``uv`` (``u < v``) with no triangle ``{x, y, v}`` where ``x, y <= u``.

    For each ``v`` let ``t`` be the least lower neighbour of ``v`` having a
    smaller lower neighbour of ``v`` as a neighbour; ``uv`` is triangle-crossed
    exactly when ``u >= t``.
    """
    nbr = g.nbr
    first_tri = []
    for v in range(g.n):
        below = nbr[v] & ((1 << v) - 1)
        t = g.n
        for y in bits(below):
            if nbr[y] & below & ((1 << y) - 1):
                t = y
                break
        first_tri.append(t)
    return {e for e in g.edges if e.lo < first_tri[e.hi]}


def decompose_capped(g: OrderedGraph, *, check: bool = True) -> Decomposition:
    if check:
        bad = find_capped_violation(g)
        if bad is not None:
            raise NotCappedError("input is not capped", bad)
    if g.n == 0:
        return Decomposition([], 0)
    if not g.edges:
        return Decomposition([], 1)
    parts: list[OrderedGraph] = []
    rest = g
    while _has_triangle(rest):
        layer = triangle_crossed_complement(rest)
        if not layer:
            raise InternalContradiction("a graph with edges had no triangle-uncrossed edge")
        parts.append(subgraph_on_edges(g.n, layer))
        rest = subgraph_on_edges(g.n, set(rest.edges) - layer)
    parts.append(rest)
    return Decomposition(parts, len(parts) + 1)


def between_common(g: OrderedGraph, u: int, v: int) -> list[int]:
    """``u``, ``v`` and their common neighbours strictly between them."""
    mid = g.nbr[u] & g.nbr[v] & ((1 << v) - 1) & ~((1 << (u + 1)) - 1)
    return [u, *bits(mid), v]


def clique_number_hfree(g: OrderedGraph, *, check: bool = True) -> int:
    """Largest clique of an H-free graph, from capped neighbourhoods of its edges.

    A maximum clique with extreme vertices ``u < v`` lies inside
    :func:`between_common` of ``(u, v)``, which induces a capped graph.
    """
    if check:
        wit = find_h_obstruction(g)
        if wit is not None:
            raise NotHFreeError("input is not H-free", wit)
    if g.n == 0:
        return 0
    best = 1
    for u, v in g.edges:
        sub, _ = induced(g, between_common(g, u, v))
        if sub.n <= best:
            continue
        best = max(best, decompose_capped(sub, check=check).omega)
    return best


def uncrossed_edges(g: OrderedGraph, *, hole_free: bool = False) -> set[Edge]:
    """Edges ``bd`` that no edge ``ac`` crosses (``a < b < c < d``).

    Being crossed is directional: an edge that only crosses others still
    counts as uncrossed.  Taking both roles would break cappedness of the
    remainder.  Returns the empty set when ``hole_free`` is set.
    """
    if hole_free:
        return set()
    nbr = g.nbr
    crossed: set[Edge] = set()
    for a, c in g.edges:
        above_c = ~((1 << (c + 1)) - 1)
        for b in range(a + 1, c):
            crossed.update(Edge(b, d) for d in bits(nbr[b] & above_c))
    return set(g.edges) - crossed


def bfs_levels(g: OrderedGraph) -> list[list[list[int]]]:
    """Per component (by smallest vertex), the BFS levels from that vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        levels = [[root]]
        while True:
            nxt = []
            for w in levels[-1]:
                for z in g.adj[w]:
                    if not seen[z]:
                        seen[z] = True
                        nxt.append(z)
            if not nxt:
                break
            levels.append(sorted(nxt))
        out.append(levels)
    return out


def _two_colour(g: OrderedGraph, members: list[int]) -> dict[int, int]:
    """Bipartition of ``g[members]``; raises with an odd cycle if there is none."""
    inside = 0
    for v in members:
        inside |= 1 << v
    side: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in members:
        if root in side:
            continue
        side[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            w = queue.popleft()
            for z in bits(g.nbr[w] & inside):
                if z not in side:
                    side[z] = 1 - side[w]
                    parent[z] = w
                    queue.append(z)
                elif side[z] == side[w]:
                    raise InternalContradiction("a BFS level is not bipartite",
                                                _odd_cycle(parent, w, z))
    return side


def _odd_cycle(parent: dict[int, int | None], p: int, q: int) -> list[int]:
    def to_root(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])  # type: ignore[arg-type]
        return path

    a, b = to_root(p), to_root(q)
    while len(a) > 1 and len(b) > 1 and a[-2] == b[-2]:
        a.pop()
        b.pop()
    # a and b now end at the lowest common ancestor
    return a + b[-2::-1]


def four_colour_tf_capped_holefree(g: OrderedGraph, *, check: bool = True) -> ColouringResult:
    """Colour ``2 * (level parity) + side`` with BFS levels rooted at component minima."""
    if check:
        if _has_triangle(g):
            raise PreconditionError("input has a triangle")
        bad = find_capped_violation(g)
        if bad is not None:
            raise NotCappedError("input is not capped", bad)
        hole = find_ordered_hole(g)
        if hole is not None:
            raise PreconditionError("input has an ordered hole", hole)
    colours = [0] * g.n
    for levels in bfs_levels(g):
        for depth, level in enumerate(levels):
            side = _two_colour(g, level)
            for v in level:
                colours[v] = 2 * (depth % 2) + side[v]
    if not _is_proper(g, colours):
        raise InternalContradiction("level colouring is not proper")
    omega = 0 if g.n == 0 else (2 if g.edges else 1)
    return ColouringResult(colours, len(set(colours)), omega, 4, "triangle_free_capped_hole_free",
                           palette_size=4)


def degeneracy_colour(g: OrderedGraph, cap: int) -> ColouringResult:
    """Greedy colouring along a smallest-last order; fails beyond ``cap`` colours."""
    n = g.n
    deg = [len(a) for a in g.adj]
    removed = [False] * n
    order = []
    for _ in range(n):
        v = min((w for w in range(n) if not removed[w]), key=lambda w: (deg[w], w))
        removed[v] = True
        order.append(v)
        for z in g.adj[v]:
            if not removed[z]:
                deg[z] -= 1
    colours = [-1] * n
    for v in reversed(order):
        used = {colours[z] for z in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        colours[v] = c
    k = len(set(colours))
    if k > max(cap, 1):
        raise InternalContradiction(f"greedy colouring needed {k} colours, budget {cap}")
    return ColouringResult(colours, k, 0, cap, "degenerate", palette_size=cap)


def _capped_bound(omega: int, hole_free: bool) -> int:
    if omega <= 1:
        return 1 if omega == 1 else 0
    if hole_free:
        return 4 ** (omega - 1)
    return 4 ** omega * (omega - 1)


def colour_capped(g: OrderedGraph, *, check: bool = True,
                  hole_free: bool | None = None) -> ColouringResult:
    if check:
        bad = find_capped_violation(g)
        if bad is not None:
            raise NotCappedError("input is not capped", bad)
    if hole_free is None:
        hole_free = find_ordered_hole(g) is None
    tag = "capped_hole_free" if hole_free else "capped"
    dec = decompose_capped(g, check=False)
    omega = dec.omega
    bound = _capped_bound(omega, hole_free)
    if omega <= 1:
        colours = [0] * g.n
        return ColouringResult(colours, len(set(colours)), omega, bound, tag, palette_size=bound)

    layer_colours = []
    uncrossed: set[Edge] = set()
    for part in dec.parts:
        strip = uncrossed_edges(part, hole_free=hole_free)
        uncrossed |= strip
        body = subgraph_on_edges(g.n, set(part.edges) - strip)
        layer_colours.append(four_colour_tf_capped_holefree(body, check=check).colours)
    if hole_free:
        extra = [0] * g.n
    else:
        extra = degeneracy_colour(subgraph_on_edges(g.n, uncrossed), 4 * (omega - 1)).colours
    tuples = [(*(lc[v] for lc in layer_colours), extra[v]) for v in range(g.n)]
    colours = _dense(tuples)
    if not _is_proper(g, colours):
        raise InternalContradiction("combined layer colouring is not proper")
    k = len(set(colours))
    if k > bound:
        raise InternalContradiction(f"{k} colours exceed the bound {bound}")
    return ColouringResult(colours, k, omega, bound, tag, palette_size=bound)


def hfree_bound(omega: int, hole_free: bool) -> int:
    if omega <= 1:
        return 1 if omega == 1 else 0
    return 3 * _capped_bound(omega, hole_free)


def colour_hfree(g: OrderedGraph, *, check: bool = True) -> ColouringResult:
    """Colour each capped part of the three-way partition with its own palette."""
    if check:
        wit = find_h_obstruction(g)
        if wit is not None:
            raise NotHFreeError("input is not H-free", wit)
    hole_free = find_ordered_hole(g) is None
    tag = "hfree_hole_free" if hole_free else "hfree"
    omega = clique_number_hfree(g, check=False)
    bound = hfree_bound(omega, hole_free)
    if omega <= 1:
        return ColouringResult([0] * g.n, min(g.n, 1), omega, bound, tag, palette_size=bound,
                               parts=[list(range(g.n)), [], []] if g.n else [])
    parts = parts_from_colouring(capped_three_colouring(g, check="basic" if check else "off",
                                                       require_h_free=False))
    raw: list[tuple[int, int]] = [(0, 0)] * g.n
    for idx, part in enumerate(parts):
        if not part:
            continue
        sub, _ = induced(g, part)
        res = colour_capped(sub, check=check, hole_free=hole_free or None)
        for i, v in enumerate(part):
            raw[v] = (idx, res.colours[i])
    colours = _dense(raw)
    if not _is_proper(g, colours):
        raise InternalContradiction("merged part colourings are not proper")
    k = len(set(colours))
    if k > bound:
        raise InternalContradiction(f"{k} colours exceed the bound {bound}")
    return ColouringResult(colours, k, omega, bound, tag, palette_size=bound, parts=parts)
