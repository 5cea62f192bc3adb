"""Command-line entry point: ``bidx {compute,search,verify,families,enumerate}``.

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .conditions import check_conditions
from .enumeration import enumerate_connected, enumerate_dominating, extremal_search, feasible, results_to_csv
from .families import TAGS, FamilyId, admissible_families, make_family
from .graph import Graph6Error, GraphError, decode_graph6, encode_graph6, parse_edge_list
from .indices import IndexSpec, evaluate_bid
from .theorems import verify_theorem

FORMATS = ("text", "json", "csv", "graph6")


class UsageError(Exception):
    pass


def _parse_real(text: str, flag: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{flag}: not a number: {text!r}") from None


def _parse_list(text: str, flag: str) -> list[float]:
    return [_parse_real(t, flag) for t in text.split(",") if t.strip()]


def _spec_from_args(args) -> IndexSpec:
    kind = args.index.upper()
    if kind in ("CHI", "PL"):
        if args.alpha is None:
            raise UsageError(f"--index {args.index} needs --alpha")
        return IndexSpec(kind, _parse_real(args.alpha, "--alpha"))
    if kind == "SEI":
        if args.a is None:
            raise UsageError("--index sei needs --a")
        return IndexSpec(kind, _parse_real(args.a, "--a"))
    return IndexSpec(kind)


def _read_graphs(args):
    if args.graph6:
        return [decode_graph6(args.graph6)]
    if not args.input:
        raise UsageError("give a graph with --graph6 or --in")
    with open(args.input) as fh:
        text = fh.read()
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.startswith("n="):
        return [parse_edge_list(text)]
    return [decode_graph6(ln) for ln in text.splitlines() if ln.strip()]


def _fmt_value(v) -> str:
    return str(v.exact_integer) if v.exact_integer is not None else repr(v.value)


def _json_value(v):
    return v.exact_integer if v.exact_integer is not None else v.value


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_format(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not available here; choose from {', '.join(allowed)}")


def cmd_compute(args) -> int:
    _check_format(args, ("text", "json", "csv"))
    spec = _spec_from_args(args)
    rows = [(encode_graph6(g), evaluate_bid(spec, g)) for g in _read_graphs(args)]
    if args.format == "json":
        out = json.dumps([{"graph6": c, "index": spec.label, "value": _json_value(v)} for c, v in rows],
                         sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "index", "value"])
        for c, v in rows:
            w.writerow([c, spec.label, _fmt_value(v)])
        out = buf.getvalue()
    else:
        out = "".join(_fmt_value(v) + "\n" for _, v in rows)
    _emit(args, out)
    return 0


def cmd_search(args) -> int:
    spec = _spec_from_args(args)
    if args.n is None or args.m is None:
        raise UsageError("search needs --n and --m")
    if not feasible(args.n, args.m):
        raise UsageError(f"no connected graph with n={args.n}, m={args.m}")
    res = extremal_search(args.n, args.m, spec, args.direction.upper(), workers=args.workers)
    if args.format == "json":
        out = res.to_json() + "\n"
    elif args.format == "csv":
        out = results_to_csv([res])
    elif args.format == "graph6":
        out = "".join(s + "\n" for s in res.optimizer_graph6)
    else:
        d = res.to_dict()
        lines = [f"{spec.label} {args.direction.lower()} over {res.total_enumerated} connected "
                 f"({res.n},{res.m})-graphs: {d['optimum']!r}"]
        lines += [f"  {s}" for s in res.optimizer_graph6]
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    return 0


def cmd_verify(args) -> int:
    _check_format(args, ("text", "json", "csv"))
    if args.theorem is None:
        spec = _spec_from_args(args)
        mode = "MAX" if args.direction.lower() == "max" else "MIN"
        rep = check_conditions(spec, mode, args.grid_bound)
        if args.format == "json":
            out = rep.to_json() + "\n"
        elif args.format == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["index", "mode", "grid_bound", "strictness", "counterexample"])
            cex = "" if rep.counterexample is None else json.dumps(
                [rep.counterexample.kind, list(rep.counterexample.point)])
            w.writerow([rep.spec_label, rep.mode, rep.grid_bound, rep.strictness, cex])
            out = buf.getvalue()
        else:
            out = f"{rep.spec_label} {rep.mode} N={rep.grid_bound}: {rep.strictness}\n"
            if rep.counterexample:
                out += f"  counterexample {rep.counterexample.kind} at {rep.counterexample.point}: " \
                       f"{rep.counterexample.values}\n"
        _emit(args, out)
        return 0 if rep.passed else 1

    if args.n_min is None or args.n_max is None:
        raise UsageError("verify --theorem needs --n-min and --n-max")
    if args.n_min < 4 or args.n_max < args.n_min:
        raise UsageError("need 4 <= --n-min <= --n-max")
    if args.alphas is None:
        raise UsageError("verify --theorem needs --alphas (exponents, or bases a for thm6)")
    params = _parse_list(args.alphas, "--alphas")
    if args.theorem == "lemma2":
        kind = args.index.upper()
        params = [IndexSpec(kind, p) if kind in ("CHI", "PL", "SEI") else IndexSpec(kind) for p in params]
    rep = verify_theorem(args.theorem, (args.n_min, args.n_max), params, workers=args.workers)
    if args.format == "json":
        out = rep.to_json() + "\n"
    elif args.format == "csv":
        out = rep.to_csv()
    else:
        lines = []
        for c in rep.cells:
            ran = [ch for ch in c.checks if not ch.skipped]
            lines.append(f"{rep.theorem_id} n={c.n} param={c.param if not isinstance(c.param, IndexSpec) else c.param.label}: "
                         f"{'pass' if c.passed else 'FAIL'} ({len(ran)} checks)")
        for ch in rep.global_checks:
            lines.append(f"{rep.theorem_id} {ch.name}: {'pass' if ch.passed else 'FAIL'}")
        for n, p, ch in rep.failures():
            lines.append(f"  failed {ch.name} at n={n} param={p}: {ch.values}")
        lines += [f"note: {x}" for x in rep.notes]
        lines.append(f"overall: {'pass' if rep.overall else 'FAIL'}")
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    return 0 if rep.overall else 1


def cmd_families(args) -> int:
    _check_format(args, ("text", "json", "graph6"))
    if args.n is None:
        raise UsageError("families needs --n")
    if args.tags:
        tags = [t.strip().upper() for t in args.tags.split(",") if t.strip()]
        unknown = [t for t in tags if t not in TAGS]
        if unknown:
            raise UsageError(f"unknown family tags: {', '.join(unknown)}")
        fams = [FamilyId(t, args.n) for t in tags]
    else:
        fams = admissible_families(args.n)
    rows = [(f.tag, encode_graph6(make_family(f))) for f in fams]
    if args.format == "json":
        out = json.dumps([{"tag": t, "n": args.n, "graph6": c} for t, c in rows], sort_keys=True) + "\n"
    elif args.format == "graph6":
        out = "".join(c + "\n" for _, c in rows)
    else:
        out = "".join(f"{t}\t{c}\n" for t, c in rows)
    _emit(args, out)
    return 0


def cmd_enumerate(args) -> int:
    _check_format(args, ("graph6", "text"))
    if args.n is None:
        raise UsageError("enumerate needs --n")
    if args.dominating:
        if args.k is None:
            raise UsageError("enumerate --dominating needs --k")
        graphs = enumerate_dominating(args.n, args.k)
    else:
        if args.m is None:
            raise UsageError("enumerate needs --m (or --dominating --k)")
        if not feasible(args.n, args.m):
            raise UsageError(f"no connected graph with n={args.n}, m={args.m}")
        graphs = enumerate_connected(args.n, args.m, workers=args.workers)
    _emit(args, "".join(encode_graph6(g) + "\n" for g in graphs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--index", default="chi", choices=["chi", "pl", "sei", "m1", "platt"])
    common.add_argument("--alpha", help="exponent for chi / pl")
    common.add_argument("--a", help="base for sei")
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--direction", default="max", choices=["max", "min"])
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", default=None, choices=FORMATS)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (0 = all cores; default $BIDX_WORKERS or 1)")

    p = argparse.ArgumentParser(prog="bidx", description="Bond-incident-degree index toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="index value of a graph")
    c.add_argument("--graph6")
    c.add_argument("--in", dest="input", help="graph6 lines or an edge-list file")

    sub.add_parser("search", parents=[common], help="extremal (n, m)-graphs by exhaustive search")

    v = sub.add_parser("verify", parents=[common], help="theorem or condition checks")
    v.add_argument("--theorem", choices=["thm2", "thm4", "thm6", "lemma2"])
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--alphas", "--params", dest="alphas", help="comma-separated parameter values")
    v.add_argument("--grid-bound", type=int, default=50)

    f = sub.add_parser("families", parents=[common], help="named dominating-vertex families as graph6")
    f.add_argument("--tags", help="comma-separated family tags (default: all admissible)")

    e = sub.add_parser("enumerate", parents=[common], help="stream connected or dominating graphs")
    e.add_argument("--dominating", action="store_true")
    e.add_argument("--k", type=int, help="remainder edge count for --dominating")
    return p


COMMANDS = {
    "compute": cmd_compute,
    "search": cmd_search,
    "verify": cmd_verify,
    "families": cmd_families,
    "enumerate": cmd_enumerate,
}

DEFAULT_FORMAT = {"enumerate": "graph6"}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.format is None:
        args.format = DEFAULT_FORMAT.get(args.command, "text")
    if args.workers is None:
        try:
            args.workers = int(os.environ.get("BIDX_WORKERS", "1") or 1)
        except ValueError:
            print("bidx: BIDX_WORKERS must be an integer", file=sys.stderr)
            return 2
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphError, Graph6Error, ValueError, OSError) as exc:
        print(f"bidx {args.command}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
