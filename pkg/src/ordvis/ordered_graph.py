"""Ordered graphs on vertices ``0..n-1`` ordered by index.

The vertex order is the numeric order of the identifiers, so a segment of
consecutive vertices is a plain integer range and a rotation is a modular
shift of labels.  Neighbourhoods are also kept as int bitmasks, which the
reachability, hole and cappedness routines lean on heavily.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError


class Edge(NamedTuple):
    lo: int
    hi: int


@dataclass(frozen=True, order=True)
class Segment:
    """The block ``V[x, y]`` of consecutive vertices, ``x < y``."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if not self.x < self.y:
            raise GraphError(f"segment needs x < y, got ({self.x}, {self.y})")

    def interior(self) -> range:
        return range(self.x + 1, self.y)

    def has_interior(self) -> bool:
        return self.y - self.x > 1


class DuplicateEdgeWarning(UserWarning):
    pass


def _norm_edge(n: int, u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop ({u}, {v})")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    return Edge(u, v) if u < v else Edge(v, u)


class OrderedGraph:
    """Immutable simple graph with the vertex order given by index."""

    __slots__ = ("n", "edges", "adj", "nbr", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normed = {_norm_edge(n, int(u), int(v)) for u, v in edges}
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(normed))
        self._edge_set = frozenset(self.edges)
        nbr = [0] * n
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
            lists[u].append(v)
            lists[v].append(u)
        self.nbr: tuple[int, ...] = tuple(nbr)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in lists)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (Edge(u, v) if u < v else Edge(v, u)) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self.n}, edges={[tuple(e) for e in self.edges]})"


def build(n: int, edge_list: Iterable[tuple[int, int]]) -> OrderedGraph:
    """Canonical graph from raw pairs; duplicates collapse, self-loops raise."""
    return OrderedGraph(n, edge_list)


def complete_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def crosses(g: OrderedGraph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True iff ``e = ac`` crosses ``f = bd``, i.e. ``a < b < c < d``.

    The relation is directed: the edge with the smaller lower end crosses the
    other one.
    """
    for edge in (e, f):
        if not g.has_edge(*edge):
            raise GraphError(f"{tuple(edge)} is not an edge of the graph")
    a, c = sorted(e)
    b, d = sorted(f)
    return a < b < c < d


def rotate(g: OrderedGraph, r: int) -> tuple[OrderedGraph, list[int]]:
    """Relabel ``v -> (v - r) mod n`` so that ``r`` becomes the minimum.

    Returns the rotated graph and the list ``new_label[old]``.
    """
    n = g.n
    if not 0 <= r < n:
        raise GraphError(f"rotation start {r} outside 0..{n - 1}")
    mapping = [(v - r) % n for v in range(n)]
    if r == 0:
        return g, mapping
    return OrderedGraph(n, ((mapping[u], mapping[v]) for u, v in g.edges)), mapping


def induced(g: OrderedGraph, vertex_subset: Sequence[int]) -> tuple[OrderedGraph, dict[int, int]]:
    """Induced ordered subgraph on a strictly increasing vertex list."""
    prev = -1
    for v in vertex_subset:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        if v <= prev:
            raise GraphError("induced() needs a strictly increasing vertex list")
        prev = v
    mapping = {v: i for i, v in enumerate(vertex_subset)}
    sub_edges = [(mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping]
    return OrderedGraph(len(vertex_subset), sub_edges), mapping


def subgraph_on_edges(n: int, edges: Iterable[tuple[int, int]]) -> OrderedGraph:
    """Spanning subgraph with the given edge subset (same vertex set)."""
    return OrderedGraph(n, edges)


def reverse(g: OrderedGraph) -> OrderedGraph:
    """The same graph under the reversed order, ``v -> n - 1 - v``."""
    top = g.n - 1
    return OrderedGraph(g.n, ((top - v, top - u) for u, v in g.edges))


# --- text format -----------------------------------------------------------

def parse_og(text: str) -> OrderedGraph:
    """Parse the ``.og`` format: ``n m`` header, then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.  Duplicate edges
    collapse with a :class:`DuplicateEdgeWarning`.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty input: missing 'n m' header")
    lineno, head = rows[0]
    n, m = _ints(head, 2, lineno)
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative header values")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    pairs: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, toks in body:
        u, v = _ints(toks, 2, lineno)
        try:
            e = _norm_edge(n, u, v)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        if e in seen:
            warnings.warn(f"line {lineno}: duplicate edge {tuple(e)} collapsed",
                          DuplicateEdgeWarning, stacklevel=2)
        seen.add(e)
        pairs.append(e)
    return OrderedGraph(n, pairs)


def _ints(toks: list[str], count: int, lineno: int) -> list[int]:
    if len(toks) != count:
        raise GraphError(f"line {lineno}: expected {count} integers, got {len(toks)} fields")
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer field in {' '.join(toks)!r}") from None


def serialize_og(g: OrderedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
