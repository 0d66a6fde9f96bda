"""Brute-force references that follow the definitions literally.

Nothing here calls the fast code paths; each function only reads ``g.n`` and
``g.edges``.  Size guards are explicit keyword arguments and exceeding one
raises :class:`GuardExceeded` rather than returning an approximation.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import GuardExceeded
from .ordered_graph import OrderedGraph


def _adjacency(g: OrderedGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _guard(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise GuardExceeded(f"{name}={value} exceeds the oracle guard {limit}")


def bf_clique(g: OrderedGraph, *, max_n: int = 60) -> int:
    """Exact clique number by Bron-Kerbosch with pivoting."""
    _guard("n", g.n, max_n)
    if g.n == 0:
        return 0
    adj = _adjacency(g)
    best = 0

    def expand(r: int, p: set[int], x: set[int]) -> None:
        nonlocal best
        if not p and not x:
            best = max(best, r)
            return
        if r + len(p) <= best:
            return
        pivot = max(p | x, key=lambda w: len(adj[w] & p))
        for v in list(p - adj[pivot]):
            expand(r + 1, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(0, set(range(g.n)), set())
    return best


def bf_chromatic(g: OrderedGraph, *, max_n: int = 16) -> int:
    """Exact chromatic number: try k = clique number, k+1, ... by backtracking."""
    _guard("n", g.n, max_n)
    if g.n == 0:
        return 0
    adj = _adjacency(g)
    order = sorted(range(g.n), key=lambda v: -len(adj[v]))

    def colourable(k: int) -> bool:
        colour = [-1] * g.n

        def place(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            used = {colour[w] for w in adj[v]}
            # symmetry break: never open more than one fresh colour
            top = max(colour) + 1
            for c in range(min(k, top + 1)):
                if c not in used:
                    colour[v] = c
                    if place(i + 1):
                        return True
                    colour[v] = -1
            return False

        return place(0)

    k = max(1, bf_clique(g))
    while not colourable(k):
        k += 1
    return k


def bf_crossing_sequence(g: OrderedGraph, u: int, v: int, *, max_m: int = 14) -> bool:
    """Search every sequence of distinct edges against the definition.

    The order used is the rotation that starts at ``u``, written out as a
    position table, so ``u`` always precedes ``v``.
    """
    _guard("m", len(g.edges), max_m)
    if u == v:
        raise ValueError("u and v must differ")
    pos = {w: (w - u) % g.n for w in range(g.n)}
    edges = [tuple(sorted((a, b), key=pos.__getitem__)) for a, b in g.edges]

    def cross(e: tuple[int, int], f: tuple[int, int]) -> bool:
        return pos[e[0]] < pos[f[0]] < pos[e[1]] < pos[f[1]]

    def extend(seq: list[tuple[int, int]], used: set[int]) -> bool:
        last = seq[-1]
        if last[1] == v:
            return True
        for i, f in enumerate(edges):
            if i not in used and cross(last, f):
                used.add(i)
                seq.append(f)
                if extend(seq, used):
                    return True
                seq.pop()
                used.discard(i)
        return False

    for i, e in enumerate(edges):
        if e[0] == u and extend([e], {i}):
            return True
    return False


def bf_capped(g: OrderedGraph, *, max_n: int = 40) -> tuple[int, int, int, int] | None:
    """Lexicographically least ``a<b<c<d`` with ``ac, bd`` edges and ``ad`` not."""
    _guard("n", g.n, max_n)
    adj = _adjacency(g)
    for a, b, c, d in combinations(range(g.n), 4):
        if c in adj[a] and d in adj[b] and d not in adj[a]:
            return (a, b, c, d)
    return None


def bf_holes(g: OrderedGraph, *, max_n: int = 12) -> list[int] | None:
    """First vertex set (by size, then lexicographically) inducing an ordered hole."""
    _guard("n", g.n, max_n)
    adj = _adjacency(g)
    for k in range(4, g.n + 1):
        for cyc in combinations(range(g.n), k):
            if _is_ordered_hole(adj, cyc):
                return list(cyc)
    return None


def _is_ordered_hole(adj: list[set[int]], cyc: Sequence[int]) -> bool:
    k = len(cyc)
    want = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
    for a, b in combinations(cyc, 2):
        if (b in adj[a]) != (frozenset((a, b)) in want):
            return False
    return True


def bf_crossing_pair(g: OrderedGraph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    for e, f in combinations(g.edges, 2):
        (a, c), (b, d) = sorted((tuple(e), tuple(f)))
        if a < b < c < d:
            return (a, c), (b, d)
    return None


def verify_colouring(g: OrderedGraph, colours: Sequence[int]) -> tuple[bool, int]:
    """``(proper, number of distinct colours)``; length mismatch is improper."""
    if len(colours) != g.n:
        return False, len(set(colours))
    proper = all(colours[u] != colours[v] for u, v in g.edges)
    return proper, len(set(colours))


def bf_triangle_free(g: OrderedGraph) -> bool:
    adj = _adjacency(g)
    return not any(adj[u] & adj[v] for u, v in g.edges)
