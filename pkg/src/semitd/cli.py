"""Command-line front end.

Exit codes:
    0  success / valid
    1  checked object is invalid (``check``, ``seo verify``)
    2  parse error, bad arguments or unusable instance (disconnected, n < 3)
    3  graph is not strongly chordal
    4  supplied SEO is not a permutation or fails verification
    5  instance too large for the brute-force oracle
"""
from __future__ import annotations

import argparse
import os
import sys

from . import bench, generators
from .graph import (
    GraphFormatError,
    InvalidInstance,
    format_vertex_line,
    parse_vertex_line,
    read_graph,
    semitotal_violation,
    serialize_edge_list,
)
from .oracle import TooLarge, report
from .ordering import NotAPermutation, NotStronglyChordal, SeoOrdering, find_seo, verify_seo
from .solver import solve, solve_with_trace

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_NOT_SC, EXIT_BAD_SEO, EXIT_TOO_LARGE = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_graph(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _read_line_arg(arg: str) -> str:
    """An argument naming an existing file is read; anything else is taken literally."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _load_order(arg: str, n: int) -> list[int]:
    try:
        order = parse_vertex_line(_read_line_arg(arg), n)
    except GraphFormatError as exc:
        raise CliError(EXIT_BAD_SEO, f"bad SEO: {exc}") from None
    if len(order) != n:
        raise CliError(EXIT_BAD_SEO, f"bad SEO: expected {n} ids, got {len(order)}")
    return order


def _trace_line(ev, order) -> str:
    def ids(ps):
        return ",".join(str(order[p] + 1) for p in ps) or "-"

    return (f"i={ev.i + 1} case={ev.case} select={ids(ev.selected)} pair={ids(ev.paired)} "
            f"mark={ids(ev.marked)} unmark={ids(ev.unmarked)}")


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    if args.seo:
        order = _load_order(args.seo, g.n)
        if not verify_seo(g, order):
            raise CliError(EXIT_BAD_SEO, "supplied ordering is not a strong elimination ordering")
        seo = SeoOrdering.build(g, order)
    else:
        try:
            seo = find_seo(g)
        except NotStronglyChordal as exc:
            raise CliError(EXIT_NOT_SC, f"not strongly chordal: {exc}") from None
    res = solve_with_trace(g, seo, debug=args.debug) if args.trace else solve(g, seo, debug=args.debug)
    if args.trace:
        for ev in res.trace:
            print(_trace_line(ev, seo.order))
    print(res.size)
    print(format_vertex_line(res.set))
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    try:
        members = parse_vertex_line(_read_line_arg(args.set), g.n)
    except GraphFormatError as exc:
        raise CliError(EXIT_PARSE, f"bad vertex set: {exc}") from None
    reason = semitotal_violation(g, members)
    if reason is None:
        print("valid")
        return EXIT_OK
    print(f"invalid: {reason}")
    return EXIT_INVALID


def cmd_seo(args) -> int:
    g = _load_graph(args.graph)
    if args.action == "find":
        try:
            seo = find_seo(g)
        except NotStronglyChordal as exc:
            raise CliError(EXIT_NOT_SC, f"not strongly chordal: {exc}") from None
        print(format_vertex_line(seo.order))
        return EXIT_OK
    if args.order is None:
        raise CliError(EXIT_PARSE, "seo verify needs an ordering")
    order = _load_order(args.order, g.n)
    try:
        ok = verify_seo(g, order)
    except NotAPermutation as exc:
        raise CliError(EXIT_BAD_SEO, str(exc)) from None
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    try:
        rep = report(g)
    except TooLarge as exc:
        raise CliError(EXIT_TOO_LARGE, str(exc)) from None
    print(rep.gamma, rep.gamma_t2, rep.gamma_t)
    print(format_vertex_line(rep.witness_gamma))
    print(format_vertex_line(rep.witness_gamma_t2))
    print(format_vertex_line(rep.witness_gamma_t))
    return EXIT_OK


def _knobs(args) -> dict:
    knobs = {}
    if args.scale is not None:
        knobs["scale"] = args.scale
    if args.max_clique is not None:
        knobs["max_clique"] = args.max_clique
    return knobs


def cmd_gen(args) -> int:
    try:
        g = generators.GenSpec(args.family, args.n, args.seed, **_knobs(args)).generate()
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    text = serialize_edge_list(g)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise CliError(EXIT_PARSE, f"bad size list {args.sizes!r}") from None
    if not sizes or min(sizes) < 3:
        raise CliError(EXIT_PARSE, "sizes must be integers >= 3")
    try:
        rows = bench.run_bench(args.family, sizes, args.seed, repeats=args.repeats, **_knobs(args))
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            bench.write_csv(rows, fh)
    else:
        bench.write_csv(rows, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semitd", description="Minimum semitotal domination on strongly chordal graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a minimum semitotal dominating set")
    s.add_argument("graph")
    s.add_argument("--seo", help="SEO file (or inline id list); computed when omitted")
    s.add_argument("--trace", action="store_true", help="print one line per iteration")
    s.add_argument("--debug", action="store_true", help="assert solver invariants at every iteration")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("check", help="check a vertex set for semitotal domination")
    s.add_argument("graph")
    s.add_argument("set", help="vertex-set file (or inline id list)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("seo", help="find or verify a strong elimination ordering")
    s.add_argument("action", choices=("find", "verify"))
    s.add_argument("graph")
    s.add_argument("order", nargs="?", help="ordering file (or inline id list) for verify")
    s.set_defaults(func=cmd_seo)

    s = sub.add_parser("oracle", help="exact gamma, gamma_t2, gamma_t by exhaustive search (n <= 24)")
    s.add_argument("graph")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="generate a random strongly chordal graph")
    s.add_argument("family", choices=generators.FAMILIES)
    s.add_argument("n", type=int)
    s.add_argument("seed", type=int)
    s.add_argument("out", nargs="?", help="output path (stdout when omitted)")
    s.add_argument("--scale", type=float, help="interval family: mean interval length is scale/n")
    s.add_argument("--max-clique", type=int, help="block family: largest block size")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time the solver over a list of sizes and write CSV")
    s.add_argument("family", choices=generators.FAMILIES)
    s.add_argument("sizes", help="comma-separated vertex counts, e.g. 10000,20000,40000")
    s.add_argument("seed", type=int)
    s.add_argument("out", nargs="?", help="CSV path (stdout when omitted)")
    s.add_argument("--repeats", type=int, default=21)
    s.add_argument("--scale", type=float)
    s.add_argument("--max-clique", type=int)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidInstance as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
