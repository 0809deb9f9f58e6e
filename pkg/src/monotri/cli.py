"""Command-line front end.

Output is byte-deterministic for fixed inputs and flags: parallelism and
search mode may change how results are found but never what is printed.
Exit codes: 0 success, 1 domain error (bad input), 2 cap or budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, cliques, coloring, ramsey, sums
from .errors import CapExceededError, GeometryError, SearchBudgetExceeded
from .incidence import (
    Configuration,
    IncidenceGeometry,
    as_geometry,
    classify,
    parse_configuration,
    serialize_braces,
)
from .triangles import enumerate_triangles, triangles_to_json, triangles_to_text


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; bad command lines are domain
    errors here, so remap to 1 (2 is reserved for cap refusals)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def _load(args, *, need_configuration: bool = False):
    """Resolve the geometry input: --builtin name or positional file path."""
    if getattr(args, "builtin", None):
        try:
            obj = catalog.builtin(args.builtin)
        except KeyError as exc:
            raise GeometryError(str(exc.args[0])) from None
    elif getattr(args, "input", None):
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GeometryError(f"cannot read {args.input}: {exc.strerror}") from None
        obj = parse_configuration(text)
    else:
        raise GeometryError("no input: give a file path or --builtin NAME")
    if need_configuration and not isinstance(obj, Configuration):
        result = classify(as_geometry(obj))
        if not isinstance(result, Configuration):
            raise GeometryError(f"input is not a uniform configuration: {result.reason}")
        obj = result
    return obj


def _add_input(sub, *, optional_builtin=True):
    sub.add_argument("input", nargs="?", help="geometry file (brace or plain format)")
    if optional_builtin:
        sub.add_argument("--builtin", metavar="NAME",
                         help="use a catalog entry instead of a file")


def _add_search_flags(sub):
    sub.add_argument("--mode", choices=("auto", "exhaustive", "bnb"), default="auto")
    sub.add_argument("--jobs", type=int, default=1, metavar="N")


def _add_output(sub):
    sub.add_argument("--output", choices=("text", "json"), default="text")


def _menger_dot(geom: IncidenceGeometry, line_colors=None) -> str:
    """Menger graph in DOT form; with a coloring, edges carry their line's
    color (line indices appear as edge labels)."""
    rows = ["graph menger {"]
    for p in range(1, geom.point_count + 1):
        rows.append(f"  {p};")
    for idx, line in enumerate(geom.lines):
        attrs = f"label={idx}"
        if line_colors is not None:
            attrs += f' color={"red" if line_colors[idx] == 0 else "blue"}'
        pts = sorted(line)
        for i, p in enumerate(pts):
            for q in pts[i + 1:]:
                rows.append(f"  {p} -- {q} [{attrs}];")
    rows.append("}")
    return "\n".join(rows)


# --- subcommand handlers ---------------------------------------------------


def _cmd_validate(args) -> int:
    obj = _load(args)
    geom = as_geometry(obj)
    result = obj if isinstance(obj, Configuration) else classify(geom)
    is_config = isinstance(result, Configuration)
    if args.dot:
        _emit(_menger_dot(geom))
        return 0
    if args.output == "json":
        _emit_json({
            "points": geom.point_count,
            "lines": geom.line_count,
            "configuration": is_config,
            "s": result.s if is_config else None,
            "t": result.t if is_config else None,
            "symmetric_v3": result.is_symmetric_v3() if is_config else False,
            "diagnostic": None if is_config else result.reason,
        })
    elif is_config:
        kind = "symmetric v3 configuration" if result.is_symmetric_v3() else "configuration"
        _emit(f"valid {kind}: {geom.point_count} points, "
              f"{geom.line_count} lines, s={result.s}, t={result.t}")
    else:
        _emit(f"valid geometry ({geom.point_count} points, {geom.line_count} lines) "
              f"but not a uniform configuration: {result.reason}")
    return 0


def _cmd_triangles(args) -> int:
    obj = _load(args)
    triangles = enumerate_triangles(obj)
    if args.output == "json":
        _emit(triangles_to_json(triangles))
    else:
        _emit(triangles_to_text(triangles) if triangles else "no triangles")
    return 0


def _cmd_min_mono(args) -> int:
    obj = _load(args)
    result = coloring.min_monochromatic(obj, mode=args.mode, jobs=args.jobs)
    if args.dot:
        _emit(_menger_dot(as_geometry(obj), result.witness.bits))
        return 0
    if args.output == "json":
        _emit_json({
            "min_mono": result.min_total,
            "red": list(result.witness.red_lines),
            "blue": list(result.witness.blue_lines),
            "red_triangles": result.witness_red_count,
            "blue_triangles": result.witness_blue_count,
            "optimal_colorings": result.optimal_coloring_count,
        })
    else:
        _emit(f"min_mono {result.min_total}")
        _emit(f"witness red lines: {' '.join(map(str, result.witness.red_lines))}")
        _emit(f"witness blue lines: {' '.join(map(str, result.witness.blue_lines)) or '-'}")
        _emit(f"red triangles {result.witness_red_count}, "
              f"blue triangles {result.witness_blue_count}")
        _emit(f"optimal colorings {result.optimal_coloring_count}")
    return 0


def _cmd_balance(args) -> int:
    obj = _load(args)
    result = coloring.min_monochromatic(obj, mode=args.mode, jobs=args.jobs)
    balance = coloring.optimal_color_balance(obj, mode=args.mode, jobs=args.jobs)
    if args.output == "json":
        _emit_json({"min_mono": result.min_total, "balance": balance})
    else:
        _emit(str(balance))
    return 0


def _cmd_goodman(args) -> int:
    value = ramsey.goodman_min(args.n)
    if args.output == "json":
        _emit_json({"n": args.n, "goodman": value})
    else:
        _emit(str(value))
    return 0


def _cmd_graph_min(args) -> int:
    goodman = ramsey.goodman_min(args.n)
    brute = ramsey.brute_force_min_mono(args.n, jobs=args.jobs) if args.brute else None
    disjoint = None
    if args.disjoint:
        if args.n == ramsey.DISJOINT_VERTEX_CAP and not args.slow:
            raise CapExceededError(
                f"min_max_disjoint at n={args.n} is the slow tier; pass --slow"
            )
        disjoint = ramsey.min_max_disjoint(
            args.n, jobs=args.jobs, budget_s=args.budget, progress=_progress(args)
        )
    if args.output == "json":
        _emit_json({"n": args.n, "goodman": goodman,
                    "brute_force": brute, "min_max_disjoint": disjoint})
    else:
        _emit(f"goodman {goodman}")
        if brute is not None:
            _emit(f"brute_force {brute}")
        if disjoint is not None:
            _emit(f"min_max_disjoint {disjoint}")
    return 0


def _progress(args):
    if not getattr(args, "progress", False):
        return None

    def report(done, total, nodes, best):
        sys.stderr.write(f"prefix {done}/{total} nodes={nodes} best={best}\n")
        sys.stderr.flush()

    return report


def _cmd_disjoint_min(args) -> int:
    if args.construction is not None:
        k = args.construction
        edge_coloring = ramsey.lower_bound_construction(k)
        packing = ramsey.max_disjoint_mono(edge_coloring)
        if args.output == "json":
            _emit_json({
                "k": k,
                "n": edge_coloring.n,
                "max_disjoint": packing.max_disjoint,
                "witness_triangles": [list(t) for t in packing.witness_triangles],
            })
        else:
            _emit(f"k={k} n={edge_coloring.n} max_disjoint {packing.max_disjoint}")
        return 0
    if args.n is None:
        raise GeometryError("disjoint-min needs --n or --construction")
    if args.n == ramsey.DISJOINT_VERTEX_CAP and not args.slow:
        raise CapExceededError(
            f"min_max_disjoint at n={args.n} is the slow tier; pass --slow"
        )
    value = ramsey.min_max_disjoint(
        args.n, jobs=args.jobs, budget_s=args.budget, progress=_progress(args)
    )
    if args.output == "json":
        _emit_json({"n": args.n, "min_max_disjoint": value})
    else:
        _emit(str(value))
    return 0


def _cmd_k5_classify(args) -> int:
    colorings = ramsey.triangle_free_colorings(args.n)
    rows = []
    for ec in colorings:
        red = [i for i, b in enumerate(ec.bits) if b == 0]
        blue = [i for i, b in enumerate(ec.bits) if b == 1]
        rows.append({
            "red": red,
            "blue": blue,
            "red_is_cycle": ramsey.edges_form_cycle(ec.n, ec.red_edges()),
            "blue_is_cycle": ramsey.edges_form_cycle(ec.n, ec.blue_edges()),
        })
    if args.output == "json":
        _emit_json({"n": args.n, "count": len(rows), "colorings": rows})
    else:
        _emit(f"triangle-free colorings of K_{args.n}: {len(rows)}")
        for row in rows:
            shape = "cycle+cycle" if row["red_is_cycle"] and row["blue_is_cycle"] else "other"
            _emit(f"red {' '.join(map(str, row['red']))} | "
                  f"blue {' '.join(map(str, row['blue']))} | {shape}")
    return 0


def _load_summand(args, attr_path, attr_builtin, side) -> Configuration:
    path = getattr(args, attr_path)
    name = getattr(args, attr_builtin)
    if name:
        obj = catalog.builtin(name)
    elif path:
        with open(path, encoding="utf-8") as fh:
            obj = classify(parse_configuration(fh.read()))
    else:
        raise GeometryError(f"missing {side} summand: give a file or --builtin")
    if not isinstance(obj, Configuration):
        raise GeometryError(f"{side} summand is not a uniform configuration")
    return obj


def _cmd_connected_sum(args) -> int:
    left = _load_summand(args, "file_a", "builtin", "left")
    right = _load_summand(args, "file_b", "builtin_right", "right")
    if args.all_flags:
        results = list(sums.enumerate_flag_sums(left, right))
        minima = sorted({
            coloring.min_monochromatic(s.configuration).min_total for _, s in results
        })
        first = results[0][1].configuration
        all_iso = all(
            catalog.are_isomorphic(first, s.configuration) for _, s in results[1:]
        )
        if args.output == "json":
            _emit_json({
                "flag_count": len(results),
                "min_mono_distinct": minima,
                "all_isomorphic": all_iso,
            })
        else:
            _emit(f"flag choices: {len(results)}")
            _emit(f"min_mono values: {' '.join(map(str, minima))}")
            _emit(f"all sums isomorphic: {'yes' if all_iso else 'no'}")
        return 0
    if None in (args.p1, args.l1, args.p2, args.l2):
        raise GeometryError("connected-sum needs --p1/--l1/--p2/--l2 (or --all-flags)")
    try:
        spec = sums.SumSpec(left, right, p1=args.p1, l1=args.l1, p2=args.p2, l2=args.l2)
    except ValueError as exc:
        raise GeometryError(str(exc)) from None
    summed = sums.connected_sum(spec)
    cfg = summed.configuration
    min_mono = coloring.min_monochromatic(cfg).min_total if args.min_mono else None
    if args.output == "json":
        payload = {
            "points": cfg.geometry.point_count,
            "braces": serialize_braces(cfg.geometry),
            "left_points": list(summed.left_points),
            "right_points": list(summed.right_points),
            "cross_triangles": sums.cross_triangle_count(summed),
        }
        if min_mono is not None:
            payload["min_mono"] = min_mono
        _emit_json(payload)
    else:
        _emit(serialize_braces(cfg.geometry))
        if min_mono is not None:
            _emit(f"min_mono {min_mono}")
    return 0


def _cmd_cliques(args) -> int:
    obj = _load(args)
    report = cliques.max_mutually_intersecting(obj)
    conjecture = cliques.check_conjecture(obj)
    if args.output == "json":
        _emit_json({
            "max_clique": report.max_clique_size,
            "witness": list(report.witness),
            "six_clique_packing": report.six_clique_packing,
            "conjecture": conjecture.status,
        })
    else:
        _emit(f"max_clique {report.max_clique_size}")
        _emit(f"witness: {' '.join(map(str, report.witness))}")
        _emit(f"six_clique_packing {report.six_clique_packing}")
        _emit(f"conjecture {conjecture.status}")
    return 0


def _sweep_corpus(slow: bool):
    for name in catalog.names():
        yield name, catalog.builtin(name)
    for v in range(7, 12 if slow else 11):
        for i, cfg in enumerate(catalog.enumerate_v3(v), start=1):
            yield f"v{v}#{i}", cfg


def _cmd_conjecture(args) -> int:
    if not args.sweep:
        obj = _load(args)
        report = cliques.check_conjecture(obj)
        if args.output == "json":
            _emit_json({"status": report.status, "min_mono": report.min_total,
                        "max_clique": report.max_clique_size})
        else:
            _emit(f"{report.status} (min_mono {report.min_total}, "
                  f"max_clique {report.max_clique_size})")
        return 0

    rows = []
    counterexamples = []
    for cid, obj in _sweep_corpus(args.slow):
        bound = cliques.six_line_bound_report(obj)
        status = ("vacuous" if bound.min_total == 0
                  else "holds" if bound.max_clique_size > 4 else "counterexample")
        findings = [
            f"clique {clique}: subset minimum {sub}, claimed 2"
            for clique, sub in bound.clique_minima if sub != 2
        ]
        if bound.min_total < 2 * bound.six_clique_packing:
            findings.append(
                f"min_mono {bound.min_total} < 2*packing {bound.six_clique_packing}"
            )
        if bound.max_clique_size >= 6 and bound.min_total == 0:
            findings.append("six mutually intersecting lines yet min_mono 0")
        rows.append({
            "id": cid,
            "status": status,
            "min_mono": bound.min_total,
            "max_clique": bound.max_clique_size,
            "six_clique_packing": bound.six_clique_packing,
            "bound_findings": findings,
        })
        if status == "counterexample":
            counterexamples.append(cid)
    if args.output == "json":
        _emit_json({"corpus": rows, "counterexamples": counterexamples})
    else:
        for row in rows:
            _emit(f"{row['id']}: {row['status']} min_mono={row['min_mono']} "
                  f"max_clique={row['max_clique']} packing={row['six_clique_packing']}")
            for finding in row["bound_findings"]:
                _emit(f"  finding: {finding}")
        _emit("counterexamples: " + (" ".join(counterexamples) or "none"))
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        if args.output == "json":
            _emit_json([
                {"name": name, "points": catalog.entry(name).geometry.point_count,
                 "lines": catalog.entry(name).geometry.line_count,
                 "note": catalog.entry(name).note}
                for name in catalog.names()
            ])
        else:
            for name in catalog.names():
                ent = catalog.entry(name)
                _emit(f"{name}: {ent.geometry.point_count} points, "
                      f"{ent.geometry.line_count} lines — {ent.note}")
        return 0
    ent = catalog.entry(args.name) if args.name in catalog.names() else None
    if ent is None:
        raise GeometryError(f"unknown catalog name: {args.name!r}")
    obj = catalog.builtin(args.name)
    is_config = isinstance(obj, Configuration)
    if args.output == "json":
        _emit_json({
            "name": ent.name,
            "points": ent.geometry.point_count,
            "lines": ent.geometry.line_count,
            "braces": serialize_braces(ent.geometry),
            "configuration": is_config,
            "s": obj.s if is_config else None,
            "t": obj.t if is_config else None,
            "note": ent.note,
        })
    else:
        _emit(serialize_braces(ent.geometry))
        _emit(f"# {ent.note}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.v == 11 and not args.slow:
        raise CapExceededError("v=11 enumeration is the slow tier; pass --slow")
    configs = catalog.enumerate_v3(args.v)
    braces = [serialize_braces(c.geometry) for c in configs]
    if args.outdir:
        import os

        os.makedirs(args.outdir, exist_ok=True)
        files = []
        for i, text in enumerate(braces, start=1):
            fname = f"v{args.v}_{i}.txt"
            with open(os.path.join(args.outdir, fname), "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
            files.append(fname)
        manifest = {"v": args.v, "count": len(braces), "files": files}
        with open(os.path.join(args.outdir, "manifest.json"), "w", encoding="utf-8") as fh:
            fh.write(json.dumps(manifest, indent=2) + "\n")
        _emit(f"v={args.v} configurations={len(braces)} written to {args.outdir}")
        return 0
    if args.output == "json":
        _emit_json({"v": args.v, "count": len(braces), "configurations": braces})
    else:
        _emit(f"v={args.v} configurations={len(braces)}")
        for i, text in enumerate(braces, start=1):
            _emit(f"{i} {text}")
    return 0


# --- parser wiring ---------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="monotri",
                     description="minimum monochromatic triangles in 2-colored "
                                 "complete graphs and point-line configurations")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("validate", help="parse and classify a geometry")
    _add_input(sub)
    _add_output(sub)
    sub.add_argument("--dot", action="store_true", help="emit the Menger graph as DOT")
    sub.set_defaults(func=_cmd_validate)

    sub = subs.add_parser("triangles", help="list configuration triangles")
    _add_input(sub)
    _add_output(sub)
    sub.set_defaults(func=_cmd_triangles)

    sub = subs.add_parser("min-mono", help="minimum monochromatic triangles over line colorings")
    _add_input(sub)
    _add_search_flags(sub)
    _add_output(sub)
    sub.add_argument("--dot", action="store_true",
                     help="emit the Menger graph with the witness coloring as DOT")
    sub.set_defaults(func=_cmd_min_mono)

    sub = subs.add_parser("balance", help="smaller color-class count among optimal colorings")
    _add_input(sub)
    _add_search_flags(sub)
    _add_output(sub)
    sub.set_defaults(func=_cmd_balance)

    sub = subs.add_parser("goodman", help="exact K_n monochromatic-triangle minimum")
    sub.add_argument("--n", type=int, required=True)
    _add_output(sub)
    sub.set_defaults(func=_cmd_goodman)

    sub = subs.add_parser("graph-min", help="K_n minima: formula, brute force, disjoint")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--brute", action="store_true", help="also exhaust all edge colorings")
    sub.add_argument("--disjoint", action="store_true", help="also minimize max disjoint packing")
    sub.add_argument("--slow", action="store_true")
    sub.add_argument("--budget", type=float, default=0.0, metavar="SECONDS")
    sub.add_argument("--progress", action="store_true", help="progress to stderr")
    sub.add_argument("--jobs", type=int, default=1)
    _add_output(sub)
    sub.set_defaults(func=_cmd_graph_min)

    sub = subs.add_parser("disjoint-min", help="minimum over colorings of max disjoint "
                                               "monochromatic triangles")
    sub.add_argument("--n", type=int)
    sub.add_argument("--construction", type=int, metavar="K",
                     help="evaluate the two-class lower-bound coloring on K_{3K+1}")
    sub.add_argument("--slow", action="store_true")
    sub.add_argument("--budget", type=float, default=0.0, metavar="SECONDS")
    sub.add_argument("--progress", action="store_true", help="progress to stderr")
    sub.add_argument("--jobs", type=int, default=1)
    _add_output(sub)
    sub.set_defaults(func=_cmd_disjoint_min)

    sub = subs.add_parser("k5-classify", help="triangle-free colorings of a small K_n")
    sub.add_argument("--n", type=int, default=5)
    _add_output(sub)
    sub.set_defaults(func=_cmd_k5_classify)

    sub = subs.add_parser("connected-sum", help="glue two configurations by an incidence switch")
    sub.add_argument("file_a", nargs="?", help="left summand file")
    sub.add_argument("file_b", nargs="?", help="right summand file")
    sub.add_argument("--builtin", metavar="NAME", help="left summand from the catalog")
    sub.add_argument("--builtin-right", metavar="NAME", help="right summand from the catalog")
    sub.add_argument("--p1", type=int)
    sub.add_argument("--l1", type=int)
    sub.add_argument("--p2", type=int)
    sub.add_argument("--l2", type=int)
    sub.add_argument("--all-flags", action="store_true",
                     help="sum over every flag pair; report minima and isomorphy")
    sub.add_argument("--min-mono", action="store_true",
                     help="also search the summed configuration")
    _add_output(sub)
    sub.set_defaults(func=_cmd_connected_sum)

    sub = subs.add_parser("cliques", help="mutually intersecting lines and 6-clique packing")
    _add_input(sub)
    _add_output(sub)
    sub.set_defaults(func=_cmd_cliques)

    sub = subs.add_parser("conjecture", help="nonzero minimum needs a large line clique")
    _add_input(sub)
    sub.add_argument("--sweep", action="store_true",
                     help="run the catalog plus enumerated corpus")
    sub.add_argument("--slow", action="store_true", help="extend the sweep to v=11")
    _add_output(sub)
    sub.set_defaults(func=_cmd_conjecture)

    sub = subs.add_parser("catalog", help="built-in geometries")
    sub.add_argument("action", choices=("list", "show"))
    sub.add_argument("name", nargs="?")
    _add_output(sub)
    sub.set_defaults(func=_cmd_catalog)

    sub = subs.add_parser("enumerate", help="all symmetric v3 configurations up to isomorphism")
    sub.add_argument("--v", type=int, required=True)
    sub.add_argument("--outdir", metavar="DIR",
                     help="write one brace file per configuration plus a manifest")
    sub.add_argument("--slow", action="store_true")
    _add_output(sub)
    sub.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceededError, SearchBudgetExceeded) as exc:
        sys.stderr.write(f"monotri: {exc}\n")
        return 2
    except GeometryError as exc:
        where = f" (line {exc.line_index})" if getattr(exc, "line_index", None) is not None else ""
        sys.stderr.write(f"monotri: {exc}{where}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"monotri: {exc}\n")
        return 1
    except KeyError as exc:
        sys.stderr.write(f"monotri: {exc.args[0]}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"monotri: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
