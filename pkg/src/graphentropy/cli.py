"""Command-line entry point: ``graphentropy <command> ...``.

Every JSON document carries ``spec_version``. Exit codes: 0 success,
2 disconnected input, 3 unreadable input, 4 invalid degree sequence,
5 numeric non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path

from .graph import (DisconnectedGraphError, Graph, GraphFormatError, degree_sequence,
                    degree_stats, generate_er, is_connected, read_graph, write_edge_list)
from .ordering import InvalidSequenceError, bfd_realize, bfd_tree
from .randic import alpha_sweep, normalized_randic, randic_index
from .rewire import assortativity_r, maximize_randic
from .spectral import ConvergenceError, dynamical_entropy, max_entropy_chain, spectral_radius

SPEC_VERSION = "1.0"
THREADS_ENV = "GRAPHENTROPY_THREADS"

EXIT_DISCONNECTED = 2
EXIT_PARSE = 3
EXIT_SEQUENCE = 4
EXIT_CONVERGENCE = 5

log = logging.getLogger("graphentropy")


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return f"{x:.5g}"


def _alpha_key(a: float) -> str:
    return f"{a:g}"


def analysis_report(g: Graph, name: str, alphas=(0.5, 1.0, 2.0)) -> dict:
    """One report row: size, degrees, Randic columns, lambda/2, entropy, r."""
    if not is_connected(g):
        raise DisconnectedGraphError(f"{name}: graph is not connected")
    stats = degree_stats(g)
    spec = spectral_radius(g)
    row = {"network": name, "n": g.n, "m": g.m, "d_avg": float(stats.d_avg),
           "d_max": stats.d_max, "d_min": stats.d_min}
    for a in alphas:
        row[f"R_{_alpha_key(a)}"] = randic_index(g, a)
        row[f"Rbar_{_alpha_key(a)}"] = normalized_randic(g, a)
    row["lambda_half"] = spec.lam / 2
    row["H_bits"] = spec.entropy_bits
    try:
        row["assortativity"] = assortativity_r(g)
    except ValueError:
        row["assortativity"] = None
    return row


def _emit(doc: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps({"spec_version": SPEC_VERSION, **doc}, indent=2) + "\n")


def _emit_rows(rows: list[dict], fmt: str, extra: dict | None = None) -> None:
    if fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(rows[0].keys())
        for r in rows:
            w.writerow([r["network"]] + [_fmt(v) for k, v in r.items() if k != "network"])
    else:
        _emit({"reports": rows, **(extra or {})})


def _load(path: str) -> tuple[Graph, str]:
    try:
        return read_graph(path), Path(path).stem
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc


def _write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        write_edge_list(g, fh)


def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(t) for t in text.split(",") if t.strip())


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    return max(1, int(os.environ.get(THREADS_ENV, "1")))


def cmd_analyze(args) -> int:
    g, name = _load(args.file)
    _emit_rows([analysis_report(g, name, _parse_floats(args.alphas))], args.format)
    return 0


def cmd_bfd(args) -> int:
    g, name = _load(args.file)
    alphas = _parse_floats(args.alphas)
    orig = analysis_report(g, name, alphas)
    h, _ = bfd_realize(degree_sequence(g))
    if degree_sequence(h) != degree_sequence(g):
        raise AssertionError("BFD realization changed the degree sequence")
    bfd = analysis_report(h, f"{name}-bfd", alphas)
    for col in ("n", "m", "d_avg", "d_max", "d_min"):
        assert orig[col] == bfd[col], col
    if args.out:
        _write_graph(h, args.out)
    _emit_rows([orig, bfd], args.format)
    return 0


def cmd_sweep(args) -> int:
    if args.gen:
        if args.gen != "er" or args.n is None or args.p is None:
            raise GraphFormatError("--gen er needs --n and --p")
        try:
            g = generate_er(args.n, args.p, args.seed)
        except RuntimeError as exc:
            raise DisconnectedGraphError(str(exc)) from exc
        name = f"er-n{args.n}-p{args.p:g}-seed{g.meta['seed']}"
    elif args.file:
        g, name = _load(args.file)
    else:
        raise GraphFormatError("give an input file or --gen er")
    if not is_connected(g):
        raise DisconnectedGraphError(f"{name}: graph is not connected")
    prof = alpha_sweep(g, args.lo, args.hi, args.step, threads=_threads(args))
    if args.out:
        with open(args.out, "w") as fh:
            prof.write_csv(fh)
    else:
        prof.write_csv(sys.stdout)
    star = prof.alpha_star
    summary = {"spec_version": SPEC_VERSION, "network": name,
               "alpha_star": star.alpha if star else None,
               "Rbar_star": star.rbar if star else None,
               "flat": star.flat if star else None,
               "log2_half_lambda": prof.log2_half_lambda,
               "crossings": prof.crossings()}
    sys.stdout.write(json.dumps(summary) + "\n")
    return 0


def cmd_maximize(args) -> int:
    g, name = _load(args.file)
    if args.alpha <= 0:
        raise InvalidSequenceError("--alpha must be positive")
    res = maximize_randic(g, args.alpha, budget=args.budget, seed=args.seed)
    res.write_trace(sys.stdout)
    if args.out:
        _write_graph(res.graph, args.out)
    log.info("%s: R %.6g -> %.6g in %d switches", name, res.initial_R,
             randic_index(res.graph, args.alpha), len(res.trace))
    return 0


def cmd_markov(args) -> int:
    g, name = _load(args.file)
    if not is_connected(g):
        raise DisconnectedGraphError(f"{name}: graph is not connected")
    spec = spectral_radius(g)
    chain = max_entropy_chain(g, spec)
    h = dynamical_entropy(chain)
    _emit({"network": name, "lambda": spec.lam, "H_bits": spec.entropy_bits,
           "stationary": chain.stationary.tolist(), "h_of_Pstar": h,
           "residual": abs(h - spec.entropy_bits),
           "stationarity_error": chain.stationarity_error()})
    return 0


def cmd_tree_max(args) -> int:
    try:
        seq = tuple(int(t) for t in args.degrees.split(","))
    except ValueError as exc:
        raise InvalidSequenceError(f"bad degree list {args.degrees!r}") from exc
    try:
        g, ordering = bfd_tree(seq)
    except ValueError as exc:
        raise InvalidSequenceError(str(exc)) from exc
    report = analysis_report(g, "bfd-tree", _parse_floats(args.alphas))
    if args.out:
        _write_graph(g, args.out)
    _emit({"degrees": list(seq), "lambda": 2 * report["lambda_half"], "report": report,
           "order": list(ordering.order),
           "edges": [list(e) for e in g.edges()]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphentropy",
                                description="Topological entropy and Randic analysis of graphs.")
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker threads (default: ${THREADS_ENV} or 1)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    # also accepted after the subcommand; SUPPRESS keeps the global value otherwise
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    def with_report_opts(sp):
        sp.add_argument("--alphas", default="0.5,1,2")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    a = sub.add_parser("analyze", parents=[common], help="report Randic, spectral and assortativity columns")
    a.add_argument("file")
    with_report_opts(a)
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bfd", parents=[common], help="build a BFD-ordered graph with the same degrees")
    b.add_argument("file")
    b.add_argument("--out")
    with_report_opts(b)
    b.set_defaults(func=cmd_bfd)

    s = sub.add_parser("sweep", parents=[common], help="tabulate the alpha profile")
    s.add_argument("file", nargs="?")
    s.add_argument("--gen", choices=("er",))
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=float)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--lo", type=float, default=-2.0)
    s.add_argument("--hi", type=float, default=4.0)
    s.add_argument("--step", type=float, default=0.01)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    m = sub.add_parser("maximize", parents=[common], help="hill-climb R_alpha with degree-preserving switches")
    m.add_argument("file")
    m.add_argument("--alpha", type=float, default=1.0)
    m.add_argument("--budget", type=int, default=10**4)
    m.add_argument("--seed", type=int, default=None)
    m.add_argument("--out")
    m.set_defaults(func=cmd_maximize)

    k = sub.add_parser("markov", parents=[common], help="maximum-entropy random walk summary")
    k.add_argument("file")
    k.set_defaults(func=cmd_markov)

    t = sub.add_parser("tree-max", parents=[common], help="BFD tree for a tree degree sequence")
    t.add_argument("--degrees", required=True)
    t.add_argument("--alphas", default="0.5,1,2")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tree_max)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except DisconnectedGraphError as exc:
        code, msg = EXIT_DISCONNECTED, exc
    except GraphFormatError as exc:
        code, msg = EXIT_PARSE, exc
    except InvalidSequenceError as exc:
        code, msg = EXIT_SEQUENCE, exc
    except ConvergenceError as exc:
        code, msg = EXIT_CONVERGENCE, exc
    print(f"error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
