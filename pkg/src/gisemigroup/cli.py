"""Command line interface.

    gis classify GRAPH
    gis mul GRAPH A B [C ...]
    gis inv GRAPH A
    gis green GRAPH A B
    gis solve (--left | --right) GRAPH A B
    gis enum GRAPH [--window N]
    gis cycles GRAPH VERTEX [--max-len N]
    gis iso GRAPH VERTEX [--max-len N]
    gis star GRAPH [--max-len N] [--k N] [--mu-window N]

Exit codes: 0 success (or HOLDS), 10 FAILS, 20 UNKNOWN, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from functools import reduce

from .cycles import (
    CycleError,
    GeneratorIndex,
    cycle_monoid_type,
    format_poly,
    iso_to_polycyclic,
    verify_iso_window,
)
from .elements import (
    ElementError,
    Zero,
    enumerate_elements,
    format_element,
    green_D,
    green_H,
    green_L,
    green_R,
    inv,
    mul,
    parse_element,
    path_element,
    solve_left,
    solve_right,
)
from .graph import GraphError, load_graph
from .paths import PathError, cycles_at, enumerate_paths, first_return_cycles_at, format_path
from .star import (
    DEFAULT_K,
    DEFAULT_MU_WINDOW,
    REASON_TEXT,
    Outcome,
    classify_dichotomy,
    star_witness_search,
)

EXIT_OK = 0
EXIT_FAILS = 10
EXIT_UNKNOWN = 20
EXIT_INPUT = 2

VERDICT_EXIT = {Outcome.HOLDS: EXIT_OK, Outcome.FAILS: EXIT_FAILS, Outcome.UNKNOWN: EXIT_UNKNOWN}


class InputError(Exception):
    pass


def _graph(args):
    try:
        return load_graph(args.graph)
    except OSError as exc:
        raise InputError(f"cannot read graph file {args.graph}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise InputError(f"{args.graph}: {exc}") from None


def _element(g, text):
    try:
        return parse_element(g, text)
    except ElementError as exc:
        raise InputError(f"bad element {text!r}: {exc}") from None


def _vertex(g, v):
    if not g.has_vertex(v):
        raise InputError(f"unknown vertex {v!r}")
    return v


def cmd_classify(args):
    g = _graph(args)
    verdict = classify_dichotomy(g, probe_len=args.max_len, k=args.k, mu_window=args.mu_window)
    payload = {"command": "classify", **verdict.as_dict()}
    lines = [verdict.headline()]
    lines += [f"  {c}: {REASON_TEXT[c]}" for c in verdict.reasons]
    ev = verdict.evidence
    for i, comp in enumerate(ev["components"]):
        lines.append(
            f"  component {i}: vertices {' '.join(comp['vertices'])}; "
            f"strongly connected: {_b(comp['strongly_connected'])}; infinite: {_b(comp['infinite_gis'])}"
        )
    lines.append(f"  star criterion: {_b(ev['star_sufficient'])}" + (" (vacuous)" if ev["star_vacuous"] else ""))
    probe = ev["star_probe"]
    if probe["witness"]:
        lines.append(f"  star probe: witness mu = {probe['witness']['mu']} ({probe['witness']['subset_size']} paths)")
    else:
        lines.append(f"  star probe: no witness in window (max-len {probe['max_len']}, k {probe['k']})")
    return payload, lines, VERDICT_EXIT[verdict.outcome]


def cmd_mul(args):
    g = _graph(args)
    elems = [_element(g, t) for t in args.elements]
    result = reduce(mul, elems)
    text = format_element(result)
    return {"command": "mul", "result": text}, [text], EXIT_OK


def cmd_inv(args):
    g = _graph(args)
    text = format_element(inv(_element(g, args.element)))
    return {"command": "inv", "result": text}, [text], EXIT_OK


def cmd_green(args):
    g = _graph(args)
    a, b = _element(g, args.a), _element(g, args.b)
    rel = {"L": green_L(a, b), "R": green_R(a, b), "D": green_D(a, b), "H": green_H(a, b)}
    return {"command": "green", "relations": rel}, [f"{k}: {_b(v)}" for k, v in rel.items()], EXIT_OK


def cmd_solve(args):
    g = _graph(args)
    a, b = _element(g, args.a), _element(g, args.b)
    if a is Zero or b is Zero:
        raise InputError("solve needs nonzero arguments; the zero element divides everything")
    side = "left" if args.left else "right"
    sols = (solve_left if args.left else solve_right)(g, a, b)
    texts = [format_element(x) for x in sols]
    lines = texts or ["(no solutions)"]
    return {"command": "solve", "side": side, "solutions": texts}, lines, EXIT_OK


def cmd_enum(args):
    g = _graph(args)
    texts = [format_element(x) for x in enumerate_elements(g, args.window)]
    return {"command": "enum", "window": args.window, "elements": texts}, texts, EXIT_OK


def cmd_cycles(args):
    g = _graph(args)
    v = _vertex(g, args.vertex)
    allc = [format_path(p) for p in cycles_at(g, v, args.max_len)]
    first = [format_path(p) for p in first_return_cycles_at(g, v, args.max_len)]
    payload = {"command": "cycles", "vertex": v, "max_len": args.max_len, "cycles": allc, "first_return": first}
    lines = [
        f"cycles at {v} (length <= {args.max_len}): {', '.join(allc)}",
        f"first-return cycles at {v}: {', '.join(first)}",
    ]
    return payload, lines, EXIT_OK


def cmd_iso(args):
    g = _graph(args)
    v = _vertex(g, args.vertex)
    mtype = cycle_monoid_type(g, v, args.max_len)
    index = GeneratorIndex(g, v)
    gens = first_return_cycles_at(g, v, args.max_len)[1:]
    table = [{"cycle": format_path(p), "generator": format_poly(iso_to_polycyclic(g, v, path_element(p), index))} for p in gens]
    report = verify_iso_window(g, v, args.max_len)
    payload = {"command": "iso", "type": str(mtype), "truncated": mtype.truncated, "generators": table, "report": report.as_dict()}
    lines = [str(mtype) + (" (generators listed up to the window)" if mtype.truncated else "")]
    lines += [f"  {row['cycle']} -> {row['generator']}" for row in table]
    lines.append(
        f"homomorphism verified: {report.pairs_checked} pairs, {report.hom_failures} failures "
        f"({report.pairs_skipped} pairs skipped, product outside window)"
    )
    lines.append(f"inverse check: {report.elements} elements, {report.inverse_failures} failures")
    lines.append(f"injectivity: {report.injectivity_failures} failures")
    lines += [f"  counterexample: {c}" for c in report.counterexamples]
    return payload, lines, EXIT_OK


def cmd_star(args):
    g = _graph(args)
    A = enumerate_paths(g, args.max_len)
    w = star_witness_search(g, A, args.k, args.mu_window) if A else None
    payload = {
        "command": "star",
        "max_len": args.max_len,
        "k": args.k,
        "mu_window": args.mu_window,
        "witness": w.as_dict() if w else None,
    }
    if w is None:
        lines = ["no witness in window"]
    else:
        lines = [f"witness mu = {format_element(w.mu)}"]
        lines += [f"  {format_path(x)} -> {format_path(y)}" for x, y in zip(w.subset, w.images)]
    return payload, lines, EXIT_OK


def _b(x: bool) -> str:
    return "true" if x else "false"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--quiet", action="store_true", help="print nothing; exit code only")

    parser = argparse.ArgumentParser(prog="gis", description="Graph inverse semigroup toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        p.add_argument("graph", help="graph file")
        return p

    p = add("classify", cmd_classify, "compact-or-discrete verdict")
    p.add_argument("--max-len", type=int, default=4, help="path length for the star probe")
    p.add_argument("--k", type=int, default=DEFAULT_K, help="minimum size of the lengthened subset")
    p.add_argument("--mu-window", type=int, default=DEFAULT_MU_WINDOW, help="longest path allowed in the multiplier")

    p = add("mul", cmd_mul, "multiply elements left to right")
    p.add_argument("elements", nargs="+")

    p = add("inv", cmd_inv, "inverse of an element")
    p.add_argument("element")

    p = add("green", cmd_green, "Green's relations between two elements")
    p.add_argument("a")
    p.add_argument("b")

    p = add("solve", cmd_solve, "all x with x*A = B (--left) or A*x = B (--right)")
    side = p.add_mutually_exclusive_group(required=True)
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")
    p.add_argument("a")
    p.add_argument("b")

    p = add("enum", cmd_enum, "elements with both paths of length <= window")
    p.add_argument("--window", type=int, default=2)

    p = add("cycles", cmd_cycles, "cycles and first-return cycles at a vertex")
    p.add_argument("vertex")
    p.add_argument("--max-len", type=int, default=4, help="longest cycle listed")

    p = add("iso", cmd_iso, "local cycle monoid and its polycyclic model")
    p.add_argument("vertex")
    p.add_argument("--max-len", type=int, default=4, help="window for the homomorphism check")

    p = add("star", cmd_star, "search for a length-increasing multiplier")
    p.add_argument("--max-len", type=int, default=4, help="candidate set A is every path up to this length")
    p.add_argument("--k", type=int, default=DEFAULT_K, help="minimum size of the lengthened subset")
    p.add_argument("--mu-window", type=int, default=DEFAULT_MU_WINDOW, help="longest path allowed in the multiplier")
    return parser


def _nonnegative(args):
    for name in ("max_len", "window", "mu_window"):
        if getattr(args, name, 0) < 0:
            raise InputError(f"--{name.replace('_', '-')} must be nonnegative")
    if getattr(args, "k", 1) < 1:
        raise InputError("--k must be at least 1")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    as_json = args.json or os.environ.get("GIS_JSON") == "1"
    try:
        _nonnegative(args)
        payload, lines, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except (ElementError, PathError, CycleError, GraphError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    if not args.quiet:
        if as_json:
            print(json.dumps(payload, indent=2, sort_keys=True), file=stdout)
        else:
            print("\n".join(lines), file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
