"""Integer polygons, exact vertex-to-vertex visibility, and random polygons.

All predicates use exact integer arithmetic.  Coordinates are doubled once
at entry so the midpoint of any two vertices is a lattice point.  A
segment between two vertices is a visibility edge when it never enters
the exterior.  Touching the boundary, including passing through other
vertices, is allowed.

:func:`visibility_graph` runs a vectorised int64 version of the same
predicate when the coordinates are small enough that no product can
overflow, and otherwise falls back to the pure-Python test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CoordinateRangeError, GraphError
from .ordered_graph import OrderedGraph, induced

Point = tuple[int, int]

COORD_LIMIT = 1 << 30
# doubled coordinates below this keep every int64 product exact
_FAST_LIMIT = 1 << 28


@dataclass(frozen=True)
class Polygon:
    """Counterclockwise simple polygon with integer vertices."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 3:
            raise GraphError("a polygon needs at least 3 vertices")
        for x, y in pts:
            if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
                raise CoordinateRangeError(f"coordinate ({x}, {y}) exceeds 2^30")

    def __len__(self) -> int:
        return len(self.points)


def _orient(p: Point, q: Point, r: Point) -> int:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of ``(q - p) x (r - p)``: +1 left turn, -1 right turn, 0 collinear."""
    for pt in (p, q, r):
        if abs(pt[0]) > COORD_LIMIT or abs(pt[1]) > COORD_LIMIT:
            raise CoordinateRangeError(f"coordinate {pt} exceeds 2^30")
    return _orient(p, q, r)


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """``r`` on the closed segment ``pq``, given the three are collinear."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed segments ``p1p2`` and ``q1q2`` share a point."""
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and _on_segment(p1, p2, q1)) or (o2 == 0 and _on_segment(p1, p2, q2))
            or (o3 == 0 and _on_segment(q1, q2, p1)) or (o4 == 0 and _on_segment(q1, q2, p2)))


def twice_signed_area(points: Sequence[Point]) -> int:
    n = len(points)
    return sum(points[i][0] * points[(i + 1) % n][1] - points[(i + 1) % n][0] * points[i][1]
               for i in range(n))


def is_simple_ccw(poly: Polygon | Sequence[Point]) -> bool:
    pts = poly.points if isinstance(poly, Polygon) else tuple(poly)
    n = len(pts)
    if n < 3 or len(set(pts)) != n:
        return False
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                # neighbours share one vertex and must not fold back onto each other
                if j == i + 1:
                    a, shared, b = pts[i], pts[j], pts[(j + 1) % n]
                else:
                    a, shared, b = pts[n - 1], pts[0], pts[1]
                if _orient(a, shared, b) == 0 and \
                        (a[0] - shared[0]) * (b[0] - shared[0]) + (a[1] - shared[1]) * (b[1] - shared[1]) > 0:
                    return False
                continue
            if segments_intersect(*edges[i], *edges[j]):
                return False
    return twice_signed_area(pts) > 0


def _point_status(pts: Sequence[Point], p: Point) -> int:
    """+1 inside, 0 on the boundary, -1 outside (winding number)."""
    wind = 0
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        o = _orient(a, b, p)
        if o == 0 and _on_segment(a, b, p):
            return 0
        if a[1] <= p[1] < b[1] and o > 0:
            wind += 1
        elif b[1] <= p[1] < a[1] and o < 0:
            wind -= 1
    return 1 if wind else -1


def _doubled(poly: Polygon) -> list[Point]:
    return [(2 * x, 2 * y) for x, y in poly.points]


def _visible(pts: Sequence[Point], i: int, j: int) -> bool:
    n = len(pts)
    if (j - i) % n in (1, n - 1):
        return True
    a, b = pts[i], pts[j]
    dx, dy = b[0] - a[0], b[1] - a[1]
    length2 = dx * dx + dy * dy
    stops = []
    for k in range(n):
        p, q = pts[k], pts[(k + 1) % n]
        side_p = _orient(a, b, p)
        if side_p * _orient(a, b, q) < 0 and _orient(p, q, a) * _orient(p, q, b) < 0:
            return False
        if side_p == 0 and k not in (i, j):
            t = (p[0] - a[0]) * dx + (p[1] - a[1]) * dy
            if 0 < t < length2:
                stops.append((t, p))
    # probe each piece between consecutive boundary contacts at its midpoint
    stops.sort()
    chain = [a, *(p for _, p in stops), b]
    for p, q in zip(chain, chain[1:]):
        mid = ((p[0] + q[0]) // 2, (p[1] + q[1]) // 2)
        if _point_status(pts, mid) < 0:
            return False
    return True


def vertices_visible(poly: Polygon, i: int, j: int) -> bool:
    """The closed segment between vertices ``i`` and ``j`` avoids the exterior."""
    n = len(poly)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise GraphError(f"need two distinct vertex indices in 0..{n - 1}, got {i}, {j}")
    return _visible(_doubled(poly), i, j)


def _visibility_pairs_fast(pts: np.ndarray, chunk: int = 2048) -> set[tuple[int, int]]:
    """Exact int64 visibility for all chords; pairs with contacts use the slow path."""
    n = len(pts)
    iu, ju = np.triu_indices(n, k=2)
    keep = ~((iu == 0) & (ju == n - 1))
    iu, ju = iu[keep], ju[keep]
    plist = [(int(a), int(b)) for a, b in pts]
    out: set[tuple[int, int]] = set()
    for start in range(0, len(iu), chunk):
        out |= _chunk_visible(pts, plist, iu[start:start + chunk], ju[start:start + chunk])
    return out


def _chunk_visible(pts: np.ndarray, plist: list[Point], iu: np.ndarray,
                   ju: np.ndarray) -> set[tuple[int, int]]:
    n = len(pts)
    x, y = pts[:, 0], pts[:, 1]
    ax, ay, bx, by = x[iu, None], y[iu, None], x[ju, None], y[ju, None]
    # side of every vertex relative to each candidate segment
    side = np.sign((bx - ax) * (y[None, :] - ay) - (by - ay) * (x[None, :] - ax))
    nxt = np.roll(np.arange(n), -1)
    ex, ey = x[nxt] - x, y[nxt] - y
    # side of each segment end relative to every polygon edge
    ea = np.sign(ex[None, :] * (ay - y[None, :]) - ey[None, :] * (ax - x[None, :]))
    eb = np.sign(ex[None, :] * (by - y[None, :]) - ey[None, :] * (bx - x[None, :]))
    proper = ((side * side[:, nxt]) < 0) & ((ea * eb) < 0)
    blocked = proper.any(axis=1)

    dx, dy = bx - ax, by - ay
    t = (x[None, :] - ax) * dx + (y[None, :] - ay) * dy
    length2 = dx * dx + dy * dy
    contact = ((side == 0) & (t > 0) & (t < length2)).any(axis=1)

    mx, my = (ax + bx) // 2, (ay + by) // 2
    o = ex[None, :] * (my - y[None, :]) - ey[None, :] * (mx - x[None, :])
    x2, y2 = x[nxt], y[nxt]
    on_edge = ((o == 0) & (np.minimum(x, x2)[None, :] <= mx) & (mx <= np.maximum(x, x2)[None, :])
               & (np.minimum(y, y2)[None, :] <= my) & (my <= np.maximum(y, y2)[None, :]))
    up = (y[None, :] <= my) & (my < y2[None, :]) & (o > 0)
    down = (y2[None, :] <= my) & (my < y[None, :]) & (o < 0)
    wind = up.sum(axis=1) - down.sum(axis=1)
    inside = (wind != 0) | on_edge.any(axis=1)

    out = set()
    for k in range(len(iu)):
        i, j = int(iu[k]), int(ju[k])
        if blocked[k]:
            continue
        if contact[k]:
            if _visible(plist, i, j):
                out.add((i, j))
        elif inside[k]:
            out.add((i, j))
    return out


def visibility_graph(poly: Polygon, *, vectorised: bool | None = None) -> OrderedGraph:
    """Visibility graph, vertex ``i`` of the polygon becoming vertex ``i``."""
    n = len(poly)
    pts = _doubled(poly)
    if vectorised is None:
        vectorised = max(max(abs(a), abs(b)) for a, b in pts) < _FAST_LIMIT
    boundary = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    if vectorised:
        chords = _visibility_pairs_fast(np.array(pts, dtype=np.int64))
    else:
        chords = {(i, j) for i in range(n) for j in range(i + 2, n)
                  if not (i == 0 and j == n - 1) and _visible(pts, i, j)}
    return OrderedGraph(n, boundary | chords)


def curve_visibility_graph(poly: Polygon, subset: Sequence[int]) -> OrderedGraph:
    if not subset:
        raise GraphError("curve subset must be non-empty")
    sub, _ = induced(visibility_graph(poly), list(subset))
    return sub


def _tour_crossing(pts: Sequence[Point], tour: list[int]) -> tuple[int, int] | None:
    n = len(tour)
    for i in range(n - 2):
        p1, p2 = pts[tour[i]], pts[tour[i + 1]]
        for j in range(i + 2, n if i else n - 1):
            q1, q2 = pts[tour[j]], pts[tour[(j + 1) % n]]
            if segments_intersect(p1, p2, q1, q2):
                return i, j
    return None


def random_simple_polygon(n: int, seed: int, span: int = 1000, *,
                          max_tries: int = 10000) -> Polygon:
    """Deterministic random simple polygon with no three collinear vertices.

    Points are drawn from ``[0, span]^2``, joined in random order, and the
    tour is untangled by 2-opt moves (each strictly shortens it) until no two
    tour edges meet.
    """
    if n < 3:
        raise GraphError("a polygon needs at least 3 vertices")
    if span < n:
        raise GraphError(f"span {span} is too small for {n} points")
    if span > COORD_LIMIT:
        raise CoordinateRangeError("span exceeds 2^30")
    rng = random.Random(seed)
    pts: list[Point] = []
    tries = 0
    while len(pts) < n:
        tries += 1
        if tries > max_tries:
            raise GraphError(f"could not place {n} points in general position within {max_tries} draws")
        p = (rng.randint(0, span), rng.randint(0, span))
        if p in pts:
            continue
        if any(_orient(pts[a], pts[b], p) == 0
               for a in range(len(pts)) for b in range(a + 1, len(pts))):
            continue
        pts.append(p)
    tour = list(range(n))
    rng.shuffle(tour)
    while True:
        hit = _tour_crossing(pts, tour)
        if hit is None:
            break
        i, j = hit
        tour[i + 1:j + 1] = tour[i + 1:j + 1][::-1]
    ordered = [pts[v] for v in tour]
    if twice_signed_area(ordered) < 0:
        ordered.reverse()
    return Polygon(tuple(ordered))


# the figure polygon, coordinates doubled so every corner is a lattice point
FIGURE1_POLYGON = Polygon((
    (-28, 2), (-4, -22), (8, -14), (-8, -10), (8, 6), (17, -8),
    (10, -22), (26, -22), (28, -10), (8, 22), (-4, 12), (-12, 16),
))


def parse_poly(text: str, *, validate: bool = True) -> Polygon:
    """``.poly`` format: a line with ``n`` then ``n`` lines ``x y``; ``#`` comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty polygon input")
    try:
        (n,) = (int(t) for t in rows[0][1])
    except ValueError:
        raise GraphError(f"line {rows[0][0]}: expected a single vertex count") from None
    if len(rows) - 1 != n:
        raise GraphError(f"header announces {n} vertices but {len(rows) - 1} follow")
    pts = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected 'x y'")
        try:
            pts.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer coordinate") from None
    poly = Polygon(tuple(pts))
    if validate and not is_simple_ccw(poly):
        raise GraphError("polygon is not simple and counterclockwise")
    return poly


def serialize_poly(poly: Polygon) -> str:
    return "\n".join([str(len(poly)), *(f"{x} {y}" for x, y in poly.points)]) + "\n"
