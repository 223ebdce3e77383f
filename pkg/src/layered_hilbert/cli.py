"""Command-line front end.

    layered-hilbert gen boolean --n 3 -o q3.json
    layered-hilbert series q3.json --degree 8 --method chains
    layered-hilbert closed lnq --n 2 --q 2
    layered-hilbert check q3.json --degree 6

Exit codes: 0 success, 1 invalid graph or failed computation, 2 usage error,
3 disagreement between methods in ``check``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import graph as gr
from . import hilbert as hb
from . import oracle
from .series import IntSeries

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3


def _size_list(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not sizes:
        raise argparse.ArgumentTypeError("empty level list")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="layered-hilbert", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated graph as JSON")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    b = gen_sub.add_parser("boolean")
    b.add_argument("--n", type=int, required=True)
    s = gen_sub.add_parser("subspace")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    c = gen_sub.add_parser("complete")
    c.add_argument("--m", type=_size_list, required=True)
    for sp in (b, s, c):
        sp.add_argument("-o", "--output", help="output file (default stdout)")

    series = sub.add_parser("series", help="Hilbert series of a graph file")
    series.add_argument("file")
    series.add_argument("--degree", type=int, default=hb.DEFAULT_TRUNCATION)
    series.add_argument("--method", choices=("mobius", "chains", "oracle"), default="mobius")
    series.add_argument("--format", choices=("text", "json"), default="text")

    closed = sub.add_parser("closed", help="closed-form series for a graph family")
    closed_sub = closed.add_subparsers(dest="family", required=True)
    cq = closed_sub.add_parser("qn")
    cq.add_argument("--n", type=int, required=True)
    cl = closed_sub.add_parser("lnq")
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--q", type=int, required=True)
    cc = closed_sub.add_parser("complete")
    cc.add_argument("--m", type=_size_list, required=True)
    for sp in (cq, cl, cc):
        sp.add_argument("--degree", type=int, default=hb.DEFAULT_TRUNCATION)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    dual = sub.add_parser("dual", help="Koszul dual series of a graph file")
    dual.add_argument("file")
    dual.add_argument("--degree", type=int, default=hb.DEFAULT_TRUNCATION)
    dual.add_argument("--format", choices=("text", "json"), default="text")

    check = sub.add_parser("check", help="compare all methods coefficientwise")
    check.add_argument("file")
    check.add_argument("--degree", type=int, default=hb.DEFAULT_TRUNCATION)

    info = sub.add_parser("info", help="level sizes and validation report")
    info.add_argument("file")
    return p


def _emit(out, data: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(data) + "\n")
    else:
        out.write(text)


def _cmd_gen(args, out) -> int:
    if args.family == "boolean":
        g = gr.gen_boolean(args.n)
    elif args.family == "subspace":
        g = gr.gen_subspace(args.n, args.q)
    else:
        g = gr.gen_complete(args.m)
    if args.output:
        gr.save_graph(g, args.output)
    else:
        out.write(gr.serialize_graph(g))
    return EXIT_OK


def _cmd_series(args, out) -> int:
    g = gr.load_graph(args.file)
    if args.method == "oracle":
        counts = oracle.count_words(g, args.degree).counts
        s = IntSeries(counts, args.degree)
        data = {"series": list(counts), "truncation": args.degree, "method": "oracle"}
        _emit(out, data, args.format, f"method: oracle\nseries: {s}\n")
        return EXIT_OK
    res = hb.hilbert_series(g, args.degree, method=args.method, chain_cap=hb.DEFAULT_CHAIN_CAP)
    text = f"method: {res.method}\ndenominator: {res.denominator}\nseries: {res.series}\n"
    _emit(out, res.to_dict(), args.format, text)
    return EXIT_OK


def _cmd_closed(args, out) -> int:
    if args.family == "qn":
        rf = hb.closed_qn(args.n)
    elif args.family == "lnq":
        rf = hb.closed_lnq(args.n, args.q)
    else:
        rf = hb.closed_complete(args.m)
    s = rf.series(args.degree)
    data = {
        "numerator": rf.num.tolist(),
        "denominator": rf.den.tolist(),
        "series": s.tolist(),
        "truncation": args.degree,
        "method": "closed",
    }
    text = f"h(t) = {rf}\nseries: {s}\n"
    _emit(out, data, args.format, text)
    return EXIT_OK


def _cmd_dual(args, out) -> int:
    g = gr.load_graph(args.file)
    res = hb.dual_series(g, args.degree)
    poly = str(res.polynomial) if res.polynomial is not None else "none (D(-t) not divisible by 1 + t)"
    text = f"dual series: {res.series}\ndual polynomial: {poly}\n"
    _emit(out, res.to_dict(), args.format, text)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    g = gr.load_graph(args.file)
    T = args.degree
    results: dict[str, list[int]] = {"mobius": hb.hilbert_series(g, T).series.tolist()}
    try:
        results["chains"] = hb.hilbert_series(g, T, method="chains", chain_cap=hb.DEFAULT_CHAIN_CAP).series.tolist()
    except hb.ChainBudgetExceeded as exc:
        out.write(f"chains: skipped ({exc})\n")
    results["oracle"] = list(oracle.count_words(g, T).counts)

    names = list(results)
    agree = all(results[n] == results[names[0]] for n in names)
    if agree:
        out.write(f"all methods agree ({', '.join(names)}) to degree {T}\n")
        out.write(f"series: {IntSeries(results[names[0]], T)}\n")
        return EXIT_OK
    width = max(len(str(x)) for r in results.values() for x in r) + 2
    out.write("disagreement:\n")
    out.write("deg".rjust(4) + "".join(n.rjust(width) for n in names) + "\n")
    for d in range(T + 1):
        row = [results[n][d] for n in names]
        mark = "" if len(set(row)) == 1 else "  <-"
        out.write(str(d).rjust(4) + "".join(str(x).rjust(width) for x in row) + mark + "\n")
    return EXIT_DISAGREE


def _cmd_info(args, out) -> int:
    g = gr.load_graph(args.file)
    out.write(f"name: {g.name or '-'}\n")
    out.write(f"vertices: {len(g.vertices)}  edges: {len(g.edges)}  top level: {g.n}\n")
    out_deg: dict[int, int] = {}
    for e in g.edges:
        lvl = g.levels[e.tail]
        out_deg[lvl] = out_deg.get(lvl, 0) + 1
    out.write("level  vertices  edges-down\n")
    for lvl in range(g.n, -1, -1):
        out.write(f"{lvl:5d}  {g.level_sizes()[lvl]:8d}  {out_deg.get(lvl, 0):10d}\n")
    distinct = {(e.tail, e.head) for e in g.edges}
    if len(distinct) != len(g.edges):
        out.write(f"parallel edges: {len(g.edges) - len(distinct)}\n")
    out.write("valid: unique level-0 vertex, all edges drop one level, no dangling vertices\n")
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "series": _cmd_series,
    "closed": _cmd_closed,
    "dual": _cmd_dual,
    "check": _cmd_check,
    "info": _cmd_info,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "degree", 0) < 0:
        err.write("error: --degree must be nonnegative\n")
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except gr.GraphError as exc:
        err.write(f"error: {exc.kind}: {exc.detail}\n")
    except (gr.GraphSyntaxError, gr.NotPrime, gr.BottomLevelNotSingleton, hb.ChainBudgetExceeded) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
    except (OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())
