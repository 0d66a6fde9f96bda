from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ordvis.obstructions import find_capped_violation, is_h_free
from ordvis.ordered_graph import Edge, OrderedGraph, rotate

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def ordered_graphs(draw, min_n: int = 0, max_n: int = 9, max_m: int | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return OrderedGraph(n, chosen)


def capped_closure(n: int, edges) -> OrderedGraph:
    """Add cap edges until no violation is left; the result is capped."""
    es = set(edges)
    while True:
        g = OrderedGraph(n, es)
        bad = find_capped_violation(g)
        if bad is None:
            return g
        es.add((bad.a, bad.d))


@st.composite
def capped_graphs(draw, max_n: int = 10):
    g = draw(ordered_graphs(max_n=max_n))
    return capped_closure(g.n, g.edges)


def random_graph(rng: random.Random, n: int, p: float) -> OrderedGraph:
    return OrderedGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_h_free_graphs(seed: int, count: int, max_n: int = 12) -> list[OrderedGraph]:
    """Random graphs kept only when H-free; short edges make that common."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        if rng.random() < 0.5:
            g = random_graph(rng, n, rng.random())
        else:
            es = set()
            for _ in range(rng.randint(0, 2 * n)):
                u = rng.randrange(n)
                v = min(n - 1, u + rng.randint(1, rng.choice([2, 3, n])))
                if u != v:
                    es.add((u, v))
            g = OrderedGraph(n, es)
        if is_h_free(g):
            out.append(g)
    return out


def is_crossing_sequence(g: OrderedGraph, u: int, v: int, seq: list[Edge]) -> bool:
    """Check a witness against the definition in the rotation starting at ``u``."""
    rg, mp = rotate(g, u)
    rs = [tuple(sorted((mp[a], mp[b]))) for a, b in seq]
    if len(set(rs)) != len(rs) or any(not rg.has_edge(*e) for e in rs):
        return False
    if rs[0][0] != 0 or rs[-1][1] != mp[v]:
        return False
    return all(e[0] < f[0] < e[1] < f[1] for e, f in zip(rs, rs[1:]))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[num])
