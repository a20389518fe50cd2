"""Command-line front end: ``admatrix <command> ...``.

Exit status is 0 on success, 1 when a check or verification fails and 2
on bad input (unknown family, unreadable file, disconnected graph, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import invariants as inv
from . import partitions as part
from . import products as prod
from . import verify as ver
from .graph_core import (
    Graph,
    GraphError,
    all_pairs_distances,
    bipartition,
    family,
    format_edge_list,
    parse_family_spec,
    read_edge_list,
)
from .spectra import (
    CharPoly,
    ad_charpoly,
    ad_spectrum,
    cycle_spectrum_closed,
    double_star_charpoly_closed,
    is_distance_regular,
    path_charpoly_closed,
)


class CliError(Exception):
    pass


def resolve_graph(spec: str | None = None, file: str | None = None) -> Graph:
    """A graph from a family spec (``cycle:6``) or an edge-list path."""
    if file:
        try:
            return read_edge_list(file)
        except OSError as exc:
            raise CliError(f"cannot read {file}: {exc.strerror}") from None
    if spec is None:
        raise CliError("no graph given (use a family spec or --file)")
    if Path(spec).is_file():
        return read_edge_list(spec)
    return family(spec)


def _graph_from_args(args) -> Graph:
    return resolve_graph(args.graph or args.family, args.file)


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(payload, indent=2, default=_json_default))
    else:
        print(text)


def _json_default(obj):
    import numpy as np

    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(type(obj).__name__)


def _fmt_values(vals) -> str:
    return ", ".join(f"{v:.6f}" for v in vals)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_info(args) -> int:
    g = _graph_from_args(args)
    dm = all_pairs_distances(g)
    payload = {
        "name": g.name,
        "n": g.n,
        "m": g.m,
        "diameter": dm.diameter,
        "bipartite": bipartition(g) is not None,
        "diametrical_bipartite": part.is_diametrical_bipartite(g),
        "regular": g.is_regular(),
        "ad_regular": inv.is_ad_regular(g),
        "distance_regular": is_distance_regular(g) is not None,
    }
    text = "\n".join(f"{k:>22}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0


def _closed_form(g: Graph):
    try:
        name, params = parse_family_spec(g.name)
    except GraphError:
        name, params = None, ()
    if name == "path":
        n = params[0]
        return "charpoly", CharPoly((1, 0, -1)) if n == 2 else path_charpoly_closed(n)
    if name == "cycle":
        return "spectrum", cycle_spectrum_closed(params[0])
    if name == "double_star":
        return "charpoly", double_star_charpoly_closed(*params)
    raise CliError("--closed is only available for the path, cycle and double_star families")


def cmd_spectrum(args) -> int:
    g = _graph_from_args(args)
    modes = {m for m in ("exact", "numeric", "closed") if getattr(args, m)} or {"exact", "numeric"}
    payload: dict = {"name": g.name, "n": g.n}
    lines = [f"graph {g.name or '(file)'}  n={g.n}"]
    status = 0
    if "exact" in modes or "closed" in modes:
        cp = ad_charpoly(g)
        if "exact" in modes:
            payload["charpoly"] = cp.to_json()
            lines.append(f"characteristic polynomial: {cp}")
    numeric = ad_spectrum(g)
    if "numeric" in modes or "closed" in modes:
        if "numeric" in modes:
            payload["spectrum"] = numeric.tolist()
            lines.append(f"spectrum: {_fmt_values(numeric)}")
    if "closed" in modes:
        kind, value = _closed_form(g)
        if kind == "charpoly":
            agree = value == cp
            payload["closed"] = {"charpoly": value.to_json(), "agrees_with_exact": agree}
            lines.append(f"closed form: {value}  (agrees with exact: {agree})")
        else:
            gap = value.max_mismatch(numeric)
            agree = gap <= args.tol
            payload["closed"] = {"spectrum": value.tolist(), "max_mismatch": gap,
                                 "agrees_with_numeric": agree}
            lines.append(f"closed form: {_fmt_values(value)}")
            lines.append(f"max mismatch vs numeric: {gap:.3e}  (agrees: {agree})")
        status = 0 if agree else 1
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_det(args) -> int:
    g = _graph_from_args(args)
    cp = ad_charpoly(g)
    payload = {"name": g.name, "n": g.n, "det_exact": str(cp.determinant),
               "det_partitions": None, "match": None, "partition_count": None}
    if g.n <= part.ENUMERATION_CAP:
        parts = list(part.spanning_ad_partitions(g))
        via = part.det_via_partitions(g)
        payload.update(det_partitions=str(via), match=via == cp.determinant,
                       partition_count=len(parts))
    text = "\n".join(f"{k:>16}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0 if payload["match"] in (True, None) else 1


def cmd_invariants(args) -> int:
    g = _graph_from_args(args)
    summary = inv.invariants_summary(g, args.planar)
    lines = [f"{k:>16}: {summary[k]}" for k in
             ("name", "n", "m", "diameter", "degrees", "ddegrees", "addegrees",
              "d_hat_sum", "ad_regular", "alpha_ad", "chi_ad")]
    lines.append("bounds:")
    for b in summary["bounds"]:
        flag = "n/a " if not b["applicable"] else ("ok  " if b["holds"] else "FAIL")
        lines.append(f"  [{flag}] {b['name']:<28} {b['left']:.6g} {b['relation']} {b['right']:.6g}")
    _emit(args, summary, "\n".join(lines))
    return 0 if all(b["holds"] for b in summary["bounds"]) else 1


def cmd_verify(args) -> int:
    if args.list:
        for name, (_, default, alias) in ver.SUITES.items():
            print(f"{name:<24} {alias or '':<8} {default or 'documented factor pairs'}")
        return 0
    if not args.theorem:
        raise CliError("verify needs a theorem id (see --list)")
    try:
        report = ver.run_suite(args.theorem, args.population, seed=args.seed)
    except KeyError as exc:
        raise CliError(exc.args[0]) from None
    text = report.summary()
    if report.failures:
        text += "\n" + "\n".join(f"  {f.get('name', f.get('graph'))}: {f['reason']}"
                                 for f in report.failures[:20])
        if len(report.failures) > 20:
            text += f"\n  ... {len(report.failures) - 20} more"
    _emit(args, report.to_dict(), text)
    return 0 if report.passed else 1


def cmd_product(args) -> int:
    g = resolve_graph(args.g)
    h = resolve_graph(args.h)
    rep = prod.product_report(args.kind, g, h, check=args.check)
    payload = rep.to_dict()
    lines = [f"{args.kind} product of {g.name} and {h.name}: n={rep.n}"]
    if rep.case:
        lines.append(f"case: {rep.case}")
    if rep.validation:
        lines.append(f"structural validation: {rep.validation}")
    lines.append(f"observed: {_fmt_values(rep.observed)}")
    if rep.determinant is not None:
        lines.append(f"determinant: {rep.determinant}")
    if rep.predicted is not None:
        lines.append(f"predicted: {_fmt_values(rep.predicted)}")
        lines.append(f"max mismatch: {rep.max_mismatch:.3e}  match: {rep.match}")
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.match in (True, None) else 1


def cmd_gen(args) -> int:
    graphs = ver.resolve_population(args.population, seed=args.seed)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(graphs):
            stem = (g.name or f"graph{i}").replace(":", "_").replace(",", "_")
            stem = "".join(c if c.isalnum() or c in "_-.#=" else "_" for c in stem)
            (out / f"{i:04d}_{stem}.edges").write_text(f"# {g.name}\n" + format_edge_list(g))
        print(f"wrote {len(graphs)} edge-list files to {out}", file=sys.stderr)
    elif args.json:
        print(json.dumps([{"name": g.name, "n": g.n, "edges": g.edges()} for g in graphs],
                         indent=2))
    else:
        for g in graphs:
            sys.stdout.write(f"# {g.name}\n" + format_edge_list(g))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--json", action="store_true", help="emit JSON", **kw)
    parser.add_argument("--seed", type=int, help="seed for random populations",
                        **(kw or {"default": ver.DEFAULT_SEED}))
    parser.add_argument("--tol", type=float, help="spectrum comparison tolerance",
                        **(kw or {"default": 1e-9}))


def _graph_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", nargs="?", help="family spec (e.g. cycle:6) or edge-list path")
    parser.add_argument("--family", help="family spec, e.g. double_star:3,4")
    parser.add_argument("--file", help="edge-list file ('n m' header, then 'u v' lines)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="admatrix",
                                     description="Adjacency-diametrical matrices of graphs.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("info", cmd_info, "basic structure of a graph")
    _graph_args(p)

    p = add("spectrum", cmd_spectrum, "AD spectrum and characteristic polynomial")
    _graph_args(p)
    p.add_argument("--exact", action="store_true", help="exact integer characteristic polynomial")
    p.add_argument("--numeric", action="store_true", help="numeric eigenvalues")
    p.add_argument("--closed", action="store_true",
                   help="closed form (path/cycle/double_star) checked against direct computation")

    p = add("det", cmd_det, "determinant by Berkowitz and by AD-partitions")
    _graph_args(p)

    p = add("invariants", cmd_invariants, "degrees, AD invariants and bound checks")
    _graph_args(p)
    p.add_argument("--planar", action="store_true", default=None,
                   help="assert the graph is planar (enables the four-colour bound)")

    p = add("verify", cmd_verify, "run a verification suite over a population")
    p.add_argument("theorem", nargs="?", help="suite name or numeric alias (see --list)")
    p.add_argument("--population", help="population spec, e.g. exhaustive:7+random:100:10")
    p.add_argument("--list", action="store_true", help="list suites and default populations")

    p = add("product", cmd_product, "graph products and their AD spectra")
    p.add_argument("--kind", choices=["join", "lex", "cartesian"], required=True)
    p.add_argument("--g", required=True, help="first factor (family spec or file)")
    p.add_argument("--h", required=True, help="second factor (family spec or file)")
    p.add_argument("--check", action="store_true", help="compare with the closed form")

    p = add("gen", cmd_gen, "write graphs of a population as edge lists")
    p.add_argument("population", help="population spec, e.g. cycle:4..8 or random:10:8")
    p.add_argument("--out", help="directory to write one .edges file per graph")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
