"""Command-line interface; every command prints one JSON document.

Exit codes: 0 success, 1 a requested property fails, 2 malformed input or
usage, 3 an input outside the algorithm's class (witness attached), 4 an
internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import is_dataclass
from typing import Any, Callable

from . import oracles
from .capped_chroma import clique_number_hfree, colour_capped, colour_hfree
from .capped_partition import partition_three_capped
from .crossing_reach import crossing_sequence_witness
from .errors import GraphError, GuardExceeded, InternalContradiction, PreconditionError
from .geometry_vis import parse_poly, random_simple_polygon, serialize_poly, visibility_graph
from .obstructions import find_capped_violation, find_h_obstruction, find_ordered_hole
from .ordered_graph import OrderedGraph, induced, parse_og, serialize_og

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4

PROPERTIES = ("h_free", "ordered_hole_free", "capped")


class _Exit(Exception):
    def __init__(self, code: int, payload: dict[str, Any]) -> None:
        super().__init__(payload.get("error", ""))
        self.code = code
        self.payload = payload


def witness_json(w: Any) -> Any:
    if w is None:
        return None
    if hasattr(w, "to_json"):
        return w.to_json()
    if is_dataclass(w):
        return {k: witness_json(v) for k, v in vars(w).items()}
    if isinstance(w, (tuple, list)):
        return [witness_json(x) for x in w]
    return w


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_INPUT, {"error": f"cannot read {path}: {exc.strerror}"}) from None


def _load_graph(path: str) -> OrderedGraph:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return parse_og(_read_text(path))


# --- commands ---------------------------------------------------------------

def check_graph(g: OrderedGraph, require: list[str]) -> tuple[int, dict[str, Any]]:
    h = find_h_obstruction(g)
    hole = find_ordered_hole(g)
    cap = find_capped_violation(g)
    out = {
        "n": g.n, "m": g.m,
        "h_free": h is None, "ordered_hole_free": hole is None, "capped": cap is None,
        "h_witness": witness_json(h), "hole_witness": witness_json(hole),
        "capped_witness": witness_json(cap), "required": require,
    }
    return (EXIT_OK if all(out[p] for p in require) else EXIT_FAIL), out


def _check_path(args: tuple[str, list[str]]) -> tuple[int, dict[str, Any]]:
    path, require = args
    try:
        return check_graph(_load_graph(path), require)
    except GraphError as exc:
        return EXIT_INPUT, {"error": str(exc), "input": path}
    except _Exit as exc:
        return exc.code, exc.payload


def cmd_check(ns: argparse.Namespace) -> tuple[int, Any]:
    require = ns.require or ["h_free", "ordered_hole_free"]
    jobs = [(p, require) for p in ns.inputs]
    if len(jobs) == 1:
        return _check_path(jobs[0])
    if ns.jobs > 1 and "-" not in ns.inputs:
        with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
            results = list(pool.map(_check_path, jobs))
    else:
        results = [_check_path(j) for j in jobs]
    code = max(c for c, _ in results)
    return code, {"results": [dict(r, input=p) for (_, r), p in zip(results, ns.inputs)]}


def cmd_clique(ns: argparse.Namespace) -> tuple[int, Any]:
    g = _load_graph(ns.input)
    return EXIT_OK, {"omega": clique_number_hfree(g, check=not ns.no_verify),
                     "method": "decomposition"}


def cmd_color(ns: argparse.Namespace) -> tuple[int, Any]:
    g = _load_graph(ns.input)
    check = not ns.no_verify
    res = colour_capped(g, check=check) if ns.mode == "capped" else colour_hfree(g, check=check)
    out = res.to_json()
    if check:
        proper, count = oracles.verify_colouring(g, res.colours)
        out["proper"] = proper
        out["within_bound"] = count <= res.bound
        out["verified"] = True
    else:
        out["verified"] = False
    return EXIT_OK, out


def cmd_partition(ns: argparse.Namespace) -> tuple[int, Any]:
    g = _load_graph(ns.input)
    parts = partition_three_capped(g, check="off" if ns.no_verify else "basic")
    out: dict[str, Any] = {"parts": parts}
    if not ns.no_verify:
        out["capped_certificates"] = all(
            find_capped_violation(induced(g, p)[0]) is None for p in parts)
    return EXIT_OK, out


def cmd_gen(ns: argparse.Namespace) -> tuple[int, Any]:
    poly = random_simple_polygon(ns.n, ns.seed, ns.span)
    return EXIT_OK, serialize_poly(poly)


def cmd_visgraph(ns: argparse.Namespace) -> tuple[int, Any]:
    poly = parse_poly(_read_text(ns.input))
    return EXIT_OK, serialize_og(visibility_graph(poly))


def _load_colours(path: str) -> list[int]:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: invalid JSON ({exc.msg})") from None
    if isinstance(data, dict):
        data = data.get("colours")
    if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
        raise GraphError(f"{path}: expected a list of integers or an object with 'colours'")
    return data


def cmd_verify(ns: argparse.Namespace) -> tuple[int, Any]:
    g = _load_graph(ns.graph)
    colours = _load_colours(ns.colours)
    proper, count = oracles.verify_colouring(g, colours)
    out = {"proper": proper, "num_colours": count, "length_ok": len(colours) == g.n}
    return (EXIT_OK if proper else EXIT_FAIL), out


def cmd_oracle(ns: argparse.Namespace) -> tuple[int, Any]:
    g = _load_graph(ns.input)
    kind = ns.kind
    if kind == "clique":
        return EXIT_OK, {"omega": oracles.bf_clique(g, max_n=ns.max_n or 60), "method": "oracle"}
    if kind == "chromatic":
        return EXIT_OK, {"chi": oracles.bf_chromatic(g, max_n=ns.max_n or 16)}
    if kind == "capped":
        quad = oracles.bf_capped(g, max_n=ns.max_n or 40)
        return (EXIT_OK if quad is None else EXIT_FAIL), {"capped": quad is None,
                                                          "quadruple": list(quad) if quad else None}
    if kind == "holes":
        hole = oracles.bf_holes(g, max_n=ns.max_n or 12)
        return (EXIT_OK if hole is None else EXIT_FAIL), {"ordered_hole_free": hole is None,
                                                          "hole": hole}
    if kind == "xseq":
        if ns.u is None or ns.v is None:
            raise GraphError("oracle xseq needs --u and --v")
        for w in (ns.u, ns.v):
            if not 0 <= w < g.n:
                raise GraphError(f"vertex {w} outside 0..{g.n - 1}")
        found = oracles.bf_crossing_sequence(g, ns.u, ns.v, max_m=ns.max_m or 14)
        seq = crossing_sequence_witness(g, ns.u, ns.v) if found else None
        return (EXIT_OK if found else EXIT_FAIL), {
            "u": ns.u, "v": ns.v, "exists": found,
            "sequence": [list(e) for e in seq] if seq else None}
    # verify
    if ns.colours is None:
        raise GraphError("oracle verify needs --colours FILE")
    colours = _load_colours(ns.colours)
    proper, count = oracles.verify_colouring(g, colours)
    return (EXIT_OK if proper else EXIT_FAIL), {"proper": proper, "num_colours": count}


# --- plumbing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable summary")
    common.add_argument("--no-verify", action="store_true",
                        help="skip precondition checks and certificate verification")
    common.add_argument("--jobs", type=int, default=1, help="worker processes across inputs")

    p = argparse.ArgumentParser(prog="ordvis", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="obstruction and cappedness report")
    c.add_argument("inputs", nargs="+", metavar="IN.og")
    c.add_argument("--require", action="append", choices=PROPERTIES,
                   help="property that must hold for exit 0 (repeatable; "
                        "default h_free and ordered_hole_free)")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("clique", parents=[common], help="clique number of an H-free graph")
    c.add_argument("input", metavar="IN.og")
    c.set_defaults(func=cmd_clique)

    c = sub.add_parser("color", aliases=["colour"], parents=[common], help="bounded colouring")
    c.add_argument("input", metavar="IN.og")
    c.add_argument("--mode", choices=("capped", "hfree"), default="hfree")
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("partition", parents=[common], help="three capped parts")
    c.add_argument("input", metavar="IN.og")
    c.set_defaults(func=cmd_partition)

    c = sub.add_parser("gen", parents=[common], help="generate instances")
    c.add_argument("what", choices=("polygon",))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--span", type=int, default=1000)
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("visgraph", parents=[common], help="polygon to visibility graph")
    c.add_argument("input", metavar="IN.poly")
    c.set_defaults(func=cmd_visgraph)

    c = sub.add_parser("verify", parents=[common], help="check a colouring")
    c.add_argument("graph", metavar="IN.og")
    c.add_argument("colours", metavar="COLOURS.json")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("oracle", parents=[common], help="brute-force references")
    c.add_argument("kind", choices=("clique", "chromatic", "capped", "holes", "xseq", "verify"))
    c.add_argument("input", metavar="IN.og")
    c.add_argument("--u", type=int)
    c.add_argument("--v", type=int)
    c.add_argument("--colours", metavar="COLOURS.json")
    c.add_argument("--max-n", type=int)
    c.add_argument("--max-m", type=int)
    c.set_defaults(func=cmd_oracle)
    return p


def _summary(payload: dict[str, Any]) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and len(value) > 12:
            value = f"[{len(value)} items]"
        lines.append(f"{key}: {json.dumps(value) if not isinstance(value, str) else value}")
    return "\n".join(lines) + "\n"


def _emit(payload: Any, pretty: bool) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
    elif pretty:
        sys.stdout.write(_summary(payload))
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    handler: Callable[[argparse.Namespace], tuple[int, Any]] = ns.func
    pretty = getattr(ns, "pretty", False)
    try:
        code, payload = handler(ns)
    except _Exit as exc:
        code, payload = exc.code, exc.payload
    except PreconditionError as exc:
        code, payload = EXIT_PRECONDITION, {"error": str(exc), "kind": type(exc).__name__,
                                            "witness": witness_json(exc.witness)}
    except (GraphError, GuardExceeded, ValueError) as exc:
        code, payload = EXIT_INPUT, {"error": str(exc), "kind": type(exc).__name__}
    except InternalContradiction as exc:
        code, payload = EXIT_INTERNAL, {"error": str(exc), "kind": "InternalContradiction",
                                        "witness": witness_json(exc.witness)}
    _emit(payload, pretty)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
