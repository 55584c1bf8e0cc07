"""Command-line front end.

Subcommands: ``bounds``, ``construct``, ``analyze``, ``search``, ``spectrum``,
``table``, and ``verify``.  Graphs are written in the canonical edge-list
format by default; ``--format dot`` and ``--format json`` select the other
exports.  The JSON form re-parses; DOT is write-only.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bounds as bounds_mod
from . import families, metrics, search as search_mod, spectral
from .core import (
    MixedGraph,
    format_edge_list,
    parse_edge_list,
    validate_and_profile,
    verify_automorphism,
)
from .errors import MixedGraphError, UnsupportedParameterError


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except MixedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedgraphs",
        description="Bipartite unit-degree mixed graphs: constructions, "
        "bounds, spectra, and extremal search.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("bounds", help="order bounds at a given diameter")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--z", type=int, default=1)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("construct", help="build a family graph and export it")
    p.add_argument(
        "family", choices=["bdm", "bdm-star", "bd", "crm", "cdrm", "lift"]
    )
    p.add_argument("--m", type=int, help="modulus / ring length")
    p.add_argument("--n", type=int, help="doubling parameter or ring length")
    p.add_argument("--c", type=int, help="chord length")
    p.add_argument("--convention", choices=["shift", "reflect"], default="shift")
    p.add_argument("--base", choices=["bdm5"], default="bdm5")
    p.add_argument("--format", choices=["edges", "dot", "json"], default="edges")
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("analyze", help="profile a graph file (edges or json)")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("search", help="run one of the searches")
    ssub = p.add_subparsers(required=True)

    q = ssub.add_parser("exhaustive", help="exact maximum order for small k")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--general", action="store_true", help="allow degrees < 1")
    q.add_argument("--budget", type=int)
    q.set_defaults(handler=_cmd_search_exhaustive)

    q = ssub.add_parser("lift", help="voltage-assignment search on a template")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--template", type=int, choices=[2, 4], default=4)
    q.add_argument("--q", type=int, action="append", required=True,
                   help="group order (repeatable)")
    q.add_argument("--budget", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.set_defaults(handler=_cmd_search_lift)

    q = ssub.add_parser("cdrm-scan", help="best chordal double ring for one m")
    q.add_argument("--m", type=int, required=True)
    q.set_defaults(handler=_cmd_search_cdrm)

    p = sub.add_parser("spectrum", help="eigenvalues of a named base matrix")
    p.add_argument("which", choices=["bdm5"])
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("table", help="print a computed summary table")
    p.add_argument("which", choices=["1", "6"])
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument(
        "suite",
        choices=["bdm-diameter", "automorphisms", "tables34", "crm-table6"],
    )
    p.set_defaults(handler=_cmd_verify)

    return parser


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------

def _cmd_bounds(args: argparse.Namespace) -> int:
    print(f"moore({args.r},{args.z},{args.k}) = "
          f"{bounds_mod.moore_bipartite(args.r, args.z, args.k)}")
    if args.r == 1 and args.z == 1:
        if args.k >= 3:
            print(f"improved(k={args.k}) = {bounds_mod.improved_bound(args.k)}")
        print(f"crm_upper(k={args.k}) = {bounds_mod.crm_upper(args.k)}")
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    g = _construct_graph(args)
    text = _render(g, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _construct_graph(args: argparse.Namespace) -> MixedGraph:
    family = args.family
    if family == "bdm":
        if args.m is None and args.n is None:
            raise UnsupportedParameterError("bdm needs --m or --n")
        if args.m is not None:
            return families.bdm(args.m)
        return families.bdm_canonical(args.n)[1]
    if family == "bdm-star":
        _need(args.m is not None, "bdm-star needs --m")
        return families.bdm_star(args.m)
    if family == "bd":
        _need(args.m is not None, "bd needs --m")
        return families.bd_digraph(args.m)
    if family == "crm":
        _need(args.n is not None and args.c is not None, "crm needs --n and --c")
        return families.crm(args.n, args.c)
    if family == "cdrm":
        _need(args.m is not None and args.c is not None, "cdrm needs --m and --c")
        return families.cdrm(args.m, args.c, args.convention)
    if family == "lift":
        return families.lift(families.bdm5_base())
    raise UnsupportedParameterError(f"unknown family {family!r}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    with open(args.path, "r", encoding="utf-8") as handle:
        text = handle.read()
    g = graph_from_json(text) if text.lstrip().startswith("{") else parse_edge_list(text)
    profile = validate_and_profile(g)
    report = metrics.eccentricity_report(g)
    print(f"vertices: {g.n}")
    print(f"edges:    {g.num_edges()}")
    print(f"arcs:     {g.num_arcs()}")
    regularity = profile.regularity
    print(f"totally regular: "
          f"{'no' if regularity is None else '(%d,%d)' % regularity}")
    print(f"bipartite: {'yes' if profile.bipartite_ok else 'no'}")
    print(f"diameter: {_fmt_ecc(report.diameter)}")
    print(f"out-radius: {_fmt_ecc(report.out_radius)}  "
          f"in-radius: {_fmt_ecc(report.in_radius)}")
    print(f"out-central: {list(report.out_central)}")
    print(f"in-central:  {list(report.in_central)}")
    return 0


def _cmd_search_exhaustive(args: argparse.Namespace) -> int:
    report = search_mod.exhaustive_max_order(
        args.k, args.n_max,
        totally_regular_only=not args.general,
        budget=args.budget,
    )
    sys.stdout.write(report.serialize())
    return 0


def _cmd_search_lift(args: argparse.Namespace) -> int:
    template = (
        search_mod.two_vertex_template()
        if args.template == 2
        else search_mod.four_vertex_template()
    )
    report = search_mod.lift_search(
        args.k, template, args.q, budget=args.budget, seed=args.seed
    )
    sys.stdout.write(report.serialize())
    return 0


def _cmd_search_cdrm(args: argparse.Namespace) -> int:
    c, convention, d = search_mod.cdrm_scan(args.m)
    print(f"cdrm m={args.m} order={2 * args.m} best_c={c} "
          f"convention={convention} diameter={_fmt_ecc(d)}")
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    pm = spectral.bdm5_polynomial_matrix()
    for r in range(pm.group_order):
        values = spectral.char_poly_eigenvalues(spectral.evaluate_at_root(pm, r))
        row = "  ".join(_fmt_complex(v) for v in values)
        print(f"z = zeta^{r}: {row}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.which == "1":
        print(f"{'k':>3} {'moore':>6} {'improved':>9} {'bdm':>5}")
        for k in range(3, 17):
            bdm_order = ""
            if k % 2 == 0 and k >= 6:
                n = k // 2
                bdm_order = str(2 ** (n + 1) + 2 ** (n - 1))
            print(f"{k:>3} {bounds_mod.moore_bipartite(1, 1, k):>6} "
                  f"{bounds_mod.improved_bound(k):>9} {bdm_order:>5}")
    else:
        print(f"{'k':>3} {'n':>4} {'c':>4} {'case':>4} {'diam':>5} "
              f"{'max':>4} {'improved':>9}")
        for k in range(3, 23):
            params = families.crm_optimal(k)
            d = metrics.diameter(families.crm(params.n, params.c))
            print(f"{k:>3} {params.n:>4} {params.c:>4} {params.case:>4} "
                  f"{_fmt_ecc(d):>5} {bounds_mod.crm_upper(k):>4} "
                  f"{bounds_mod.improved_bound(k):>9}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    checks = {
        "bdm-diameter": _verify_bdm_diameter,
        "automorphisms": _verify_automorphisms,
        "tables34": _verify_walk_formulas,
        "crm-table6": _verify_crm_table,
    }
    failures = checks[args.suite]()
    return 1 if failures else 0


def _verify_bdm_diameter() -> int:
    failures = 0
    for n in range(3, 9):
        m, g = families.bdm_canonical(n)
        d = metrics.diameter(g)
        failures += _report(f"bdm n={n} (m={m}) diameter {d} == {2 * n}", d == 2 * n)
    return failures


def _verify_automorphisms() -> int:
    failures = 0
    for m in (5, 10, 20, 40):
        g = families.bdm(m)
        for name in ("reflect", "shift"):
            perm = families.automorphism_permutation(name, m)
            failures += _report(
                f"{name} is an automorphism of bdm({m})",
                verify_automorphism(g, perm),
            )
    return failures


def _verify_walk_formulas() -> int:
    failures = 0
    for m in (40, 80):
        steps = families.doubling_parameter(m)
        g = families.bdm(m)
        ok = True
        for i in range(m):
            ok &= _walk_rows_match(g, m, i, steps)
        failures += _report(f"walk endpoint formulas hold for m={m}", ok)
    return failures


def _walk_rows_match(g: MixedGraph, m: int, i: int, steps: int) -> bool:
    from .families import BdmVertex, edge_first_pattern, path_endpoint_formula

    start = BdmVertex(0, i, 1).index(m)
    for j in range(2, steps + 1):
        (endpoint,) = families.walk_pattern(g, start, edge_first_pattern(j))
        if j % 2 == 0:
            want = BdmVertex(0, path_endpoint_formula("phi", j, i, m), 0)
        else:
            want = BdmVertex(1, 2 * path_endpoint_formula("phi", j - 1, i, m) % m, 0)
        if endpoint != want.index(m):
            return False
    return True


def _verify_crm_table() -> int:
    failures = 0
    for k in range(3, 23):
        params = families.crm_optimal(k)
        d = metrics.diameter(families.crm(params.n, params.c))
        failures += _report(
            f"crm k={k} (n={params.n}, c={params.c}) diameter {_fmt_ecc(d)}",
            d == k,
        )
    return failures


def _report(label: str, ok: bool) -> int:
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Export formats
# ---------------------------------------------------------------------------

def _render(g: MixedGraph, fmt: str) -> str:
    if fmt == "edges":
        return format_edge_list(g)
    if fmt == "json":
        return graph_to_json(g)
    return graph_to_dot(g)


def graph_to_json(g: MixedGraph) -> str:
    """JSON export: keys n, edges, arcs, labels in stable order, LF endings."""
    payload = {
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "arcs": [list(a) for a in g.arcs()],
        "labels": {} if g.labels is None else {
            str(v): label for v, label in enumerate(g.labels)
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def graph_from_json(text: str) -> MixedGraph:
    payload = json.loads(text)
    labels = None
    if payload.get("labels"):
        labels = [payload["labels"][str(v)] for v in range(payload["n"])]
    return MixedGraph.build(
        payload["n"],
        edges=[tuple(e) for e in payload["edges"]],
        arcs=[tuple(a) for a in payload["arcs"]],
        labels=labels,
    )


def graph_to_dot(g: MixedGraph) -> str:
    """DOT export: edges as dir=none arrows, arcs as plain directed arrows."""
    lines = ["digraph mixedgraph {"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -> {v} [dir=none];")
    for u, v in g.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt_ecc(value: float) -> str:
    return "inf" if value == metrics.INFINITE else str(int(value))


def _fmt_complex(value: complex) -> str:
    return f"{value.real:+.4f}{value.imag:+.4f}i"


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise UnsupportedParameterError(message)


if __name__ == "__main__":
    sys.exit(main())
